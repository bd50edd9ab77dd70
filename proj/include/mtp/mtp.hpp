#ifndef MTP_MTP_HPP
#define MTP_MTP_HPP

#include "mtp/combinatorics.hpp"
#include "mtp/functions.hpp"
#include "mtp/identity_suite.hpp"
#include "mtp/multipoint_taylor.hpp"
#include "mtp/nodes.hpp"
#include "mtp/oracles.hpp"
#include "mtp/polynomial.hpp"
#include "mtp/problem.hpp"
#include "mtp/scalar.hpp"

#endif // MTP_MTP_HPP
