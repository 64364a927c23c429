#pragma once

#include "lusym/errors.hpp"
#include "lusym/partition.hpp"
#include "lusym/symbol.hpp"
#include "lusym/compact.hpp"
#include "lusym/polynomial.hpp"
#include "lusym/degrees.hpp"
#include "lusym/theta.hpp"
#include "lusym/verify.hpp"
#include "lusym/io.hpp"
