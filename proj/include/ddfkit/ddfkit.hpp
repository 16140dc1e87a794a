#pragma once

#include <ddfkit/core.hpp>
#include <ddfkit/ddf.hpp>
#include <ddfkit/io.hpp>
#include <ddfkit/oracle.hpp>
#include <ddfkit/properties.hpp>
#include <ddfkit/quad_translation.hpp>
#include <ddfkit/sampling.hpp>
#include <ddfkit/technology.hpp>
