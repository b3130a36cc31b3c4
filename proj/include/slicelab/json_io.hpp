#pragma once

// JSON encodings of every value type. Malformed input throws InvalidArgument.

#include <json.hpp>

#include "slicelab/field.hpp"
#include "slicelab/ihr.hpp"
#include "slicelab/liedata.hpp"
#include "slicelab/matgrp.hpp"
#include "slicelab/weyl.hpp"
#include "slicelab/zastava.hpp"

namespace slicelab::json_io {

using nlohmann::json;

/// "a/b", or "a" when b = 1. Integers are accepted on input.
json encode(const Rational& q);
Rational decode_rational(const json& j);

/// Ascending coefficient array.
json encode(const Poly& p);
Poly decode_poly(const json& j);

/// {"num": [...], "den": [...]}; a bare rational is accepted on input.
json encode(const RatFunc& f);
RatFunc decode_ratfunc(const json& j);

/// Row-major nested arrays.
json encode(const MatQt& m);
MatQt decode_matrix(const json& j);

json encode(const Coweight& mu);
Coweight decode_coweight(const json& j);

json encode(const GaussForm& g);

/// {"n", "mu", "matrix"}; decoding validates slice membership.
json encode(const SlicePoint& y);
SlicePoint decode_slice_point(const json& j);

json encode(const CorootInterval& a);
CorootInterval decode_coroot(const json& j);

/// {"alpha", "p", "e", "b", "g"}.
json encode(const ZastavaPoint& z);
ZastavaPoint decode_zastava(const json& j);

json encode(const MomentVector& m);
json encode(const SplitPair& s);

json encode(const Partition& mu);
Partition decode_partition(const json& j);
json encode(const QuiverData& q);

/// Term list [{"hbar", "e", "p", "b", "g", "coeff"}]. An empty list needs the
/// number of (b, g) pairs from the caller.
json encode(const NCPoly& a);
NCPoly decode_ncpoly(const json& j, int pairs = -1);

/// Same term layout without "hbar".
json encode(const CoordPoly& f);

json encode(const MembershipReport& r);

}  // namespace slicelab::json_io
