#ifndef CORONA_CORONA_HPP
#define CORONA_CORONA_HPP

#include "corona/bignum.hpp"
#include "corona/closed_form.hpp"
#include "corona/errors.hpp"
#include "corona/graph.hpp"
#include "corona/io.hpp"
#include "corona/matrix.hpp"
#include "corona/oracle.hpp"
#include "corona/rcg.hpp"
#include "corona/report.hpp"
#include "corona/spectra.hpp"
#include "corona/verify.hpp"

#endif  // CORONA_CORONA_HPP
