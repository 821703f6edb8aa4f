#ifndef STIRLING_STIRLING_HPP
#define STIRLING_STIRLING_HPP

#include <stirling/ball/ball.hpp>
#include <stirling/ball/constants.hpp>
#include <stirling/ball/format.hpp>
#include <stirling/ball/refine.hpp>
#include <stirling/exact/json.hpp>
#include <stirling/exact/polynomial.hpp>
#include <stirling/exact/rational.hpp>
#include <stirling/exact/rational_function.hpp>
#include <stirling/exact/sign_certificate.hpp>
#include <stirling/exact/sturm.hpp>
#include <stirling/outcome.hpp>
#include <stirling/proof/verify.hpp>
#include <stirling/ramanujan/theta.hpp>
#include <stirling/series/taylor_bounds.hpp>

#endif
