#pragma once

#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/poly.hpp"

namespace fx {

inline lpa::Multiplicity m(std::uint64_t n) { return lpa::Multiplicity(n); }
inline lpa::Multiplicity inf() { return lpa::Multiplicity::omega(); }

inline lpa::Graph loop_named(const std::string& v) { return lpa::Graph({v}, {{v, v, m(1)}}); }
inline lpa::Graph loop() { return loop_named("v"); }
inline lpa::Graph line() { return lpa::Graph({"u", "v"}, {{"u", "v", m(1)}}); }
inline lpa::Graph breaking() { return lpa::Graph({"w", "h"}, {{"w", "h", inf()}, {"w", "w", m(1)}}); }
inline lpa::Graph rose2() { return lpa::Graph({"v"}, {{"v", "v", m(2)}}); }
inline lpa::Graph isolated2() { return lpa::Graph({"a", "b"}, {}); }
/// Loop at v with an edge to the sink w.
inline lpa::Graph loop_tail() { return lpa::Graph({"v", "w"}, {{"v", "v", m(1)}, {"v", "w", m(1)}}); }

inline lpa::FieldSpec f2() { return lpa::FieldSpec::prime(2); }
inline lpa::FieldSpec q() { return lpa::FieldSpec::rationals(); }
inline lpa::Poly poly(const std::string& s, lpa::FieldSpec f) { return lpa::Poly::parse(s, f); }

}  // namespace fx
