#pragma once

#include "triwerner/tolerances.hpp"
#include "triwerner/tensor.hpp"
#include "triwerner/permutation.hpp"
#include "triwerner/werner.hpp"
#include "triwerner/separability.hpp"
#include "triwerner/oracles.hpp"
#include "triwerner/checks.hpp"
#include "triwerner/io.hpp"
