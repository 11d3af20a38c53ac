#include "lpa/ideal.hpp"

#include <algorithm>
#include <map>

#include "lpa/error.hpp"

namespace lpa {

Multiplicity quotient_out_degree(const Graph& g, const AdmissiblePair& p, VertexId v) {
    const VertexSet rest = g.all() - p.h;
    const VertexSet primed = breaking_vertices(g, p.h) - p.s;
    Multiplicity d;
    rest.for_each([&](VertexId t) { d = d + g.mult(v, t); });
    primed.for_each([&](VertexId t) { d = d + g.mult(v, t); });
    return d;
}

std::vector<Cycle> exit_free_cycles(const Graph& g, const AdmissiblePair& p) {
    std::vector<Cycle> out;
    const VertexSet rest = g.all() - p.h;
    for (auto& info : simple_cycles(g)) {
        if (!info.cycle.vertex_set().subset_of(rest)) continue;
        bool exit = false;
        for (auto v : info.cycle.vertices()) exit = exit || quotient_out_degree(g, p, v) != Multiplicity(1);
        if (!exit) out.push_back(std::move(info.cycle));
    }
    return out;
}

namespace {

std::string set_string(const Graph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](VertexId v) {
        if (!first) out += ",";
        out += g.name(v);
        first = false;
    });
    return out + "}";
}

std::string cycle_string(const Graph& g, const Cycle& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.vertices().size(); ++i) {
        if (i != 0) out += ",";
        out += g.name(c.vertices()[i]);
    }
    return out + ")";
}

}  // namespace

IdealRep canonicalize(const Graph& g, const PairLattice& lattice, AdmissiblePair pair, std::vector<PolyPart> parts,
                      FieldSpec field, std::vector<std::string>* warnings) {
    check_admissible(g, pair);
    for (auto& part : parts) {
        if (!(part.f.field() == field)) throw InvalidArgument("polynomial part over a different field");
        if (part.f.is_zero()) throw InvalidArgument("zero polynomial part at cycle " + cycle_string(g, part.cycle));
        if (part.f.constant_term() == 0) {
            throw InvalidArgument("polynomial " + part.f.to_string() + " at cycle " + cycle_string(g, part.cycle) +
                                  " has zero constant term");
        }
        part.f = part.f.monic();
    }

    // A unit polynomial makes the cycle's vertices part of the ideal.
    for (bool changed = true; changed;) {
        changed = false;
        std::erase_if(parts, [&](const PolyPart& part) {
            if (!part.cycle.vertex_set().subset_of(pair.h)) return false;
            if (warnings != nullptr) {
                warnings->push_back("part at cycle " + cycle_string(g, part.cycle) + " lies in H and was absorbed");
            }
            return true;
        });
        for (auto it = parts.begin(); it != parts.end(); ++it) {
            if (!it->f.is_constant()) continue;
            pair = lattice.join(pair, {closure(g, it->cycle.vertex_set()), {}});
            parts.erase(it);
            changed = true;
            break;
        }
    }

    std::sort(parts.begin(), parts.end(), [](const PolyPart& a, const PolyPart& b) { return a.cycle < b.cycle; });
    VertexSet used;
    for (const auto& part : parts) {
        if (used.intersects(part.cycle.vertex_set())) {
            throw InvalidArgument("cycle " + cycle_string(g, part.cycle) + " shares vertices with another part");
        }
        used |= part.cycle.vertex_set();
        for (auto v : part.cycle.vertices()) {
            if (quotient_out_degree(g, pair, v) != Multiplicity(1)) {
                throw InvalidArgument("cycle " + cycle_string(g, part.cycle) + " has an exit in the quotient by " +
                                      "I(" + set_string(g, pair.h) + "," + set_string(g, pair.s) + ")");
            }
        }
    }
    return IdealRep{pair, std::move(parts), field};
}

Validated validate(const Graph& g, const IdealDocument& doc, FieldSpec field, std::size_t cap) {
    const AdmissiblePair pair{g.to_set(doc.h), g.to_set(doc.s)};
    check_admissible(g, pair);
    std::vector<PolyPart> parts;
    for (const auto& raw : doc.parts) {
        std::vector<VertexId> verts;
        for (const auto& n : raw.cycle) verts.push_back(g.index(n));
        parts.push_back({Cycle(g, std::move(verts)), Poly::parse(raw.f, field)});
    }
    Validated out{IdealRep::graded(pair, field), {}};
    // The lattice is only needed to promote unit parts.
    const bool needs_lattice = std::any_of(parts.begin(), parts.end(), [](const PolyPart& p) { return p.f.is_constant(); });
    if (needs_lattice) {
        out.ideal = canonicalize(g, PairLattice(g, cap), pair, std::move(parts), field, &out.warnings);
    } else {
        out.ideal = canonicalize(g, PairLattice::from_pairs({}), pair, std::move(parts), field, &out.warnings);
    }
    return out;
}

bool is_semiprime(const IdealRep& i) {
    return std::all_of(i.parts.begin(), i.parts.end(), [](const PolyPart& p) { return is_squarefree(p.f); });
}

const char* to_string(PrimeCase c) {
    switch (c) {
        case PrimeCase::graded_directed: return "graded_directed";
        case PrimeCase::breaking_minus_u: return "breaking_minus_u";
        case PrimeCase::wk_poly: return "wk_poly";
    }
    return "?";
}

PrimeVerdict classify_prime(const Graph& g, const IdealRep& i) {
    if (!is_proper(g, i)) throw InvalidArgument("the improper ideal is not a candidate prime");
    const VertexSet rest = g.all() - i.pair.h;
    const VertexSet bh = breaking_vertices(g, i.pair.h);

    if (is_graded(i)) {
        if (i.pair.s == bh) {
            if (!is_downward_directed(g, rest)) return {std::nullopt, "E^0 \\ H is not downward directed"};
            return {PrimeWitness{PrimeCase::graded_directed, std::nullopt, std::nullopt, std::nullopt}, ""};
        }
        const VertexSet missing = bh - i.pair.s;
        if (missing.size() != 1) return {std::nullopt, "S omits more than one breaking vertex of H"};
        const VertexId u = missing.members().front();
        if (rest != ancestors(g, u)) return {std::nullopt, "E^0 \\ H is not {v : v >= " + g.name(u) + "}"};
        return {PrimeWitness{PrimeCase::breaking_minus_u, u, std::nullopt, std::nullopt}, ""};
    }

    if (i.parts.size() != 1) return {std::nullopt, "more than one polynomial part"};
    const PolyPart& part = i.parts.front();
    if (i.pair.s != bh) return {std::nullopt, "S is not all of B_H"};
    bool wk = false;
    for (const auto& info : simple_cycles(g)) {
        if (info.cycle == part.cycle) wk = info.is_wk;
    }
    if (!wk) return {std::nullopt, "cycle is not WK"};
    const VertexId u = part.cycle.base();
    if (rest != ancestors(g, u)) return {std::nullopt, "E^0 \\ H is not {v : v >= " + g.name(u) + "}"};
    if (!is_irreducible(part.f)) return {std::nullopt, "polynomial " + part.f.to_string() + " is reducible"};
    return {PrimeWitness{PrimeCase::wk_poly, u, part.cycle, part.f}, ""};
}

bool contains(const IdealRep& a, const IdealRep& b) {
    if (!(a.field == b.field)) throw InvalidArgument("ideals over different fields");
    if (!pair_leq(b.pair, a.pair)) return false;
    for (const auto& part : b.parts) {
        if (part.cycle.vertex_set().subset_of(a.pair.h)) continue;
        const auto it = std::find_if(a.parts.begin(), a.parts.end(), [&](const PolyPart& p) { return p.cycle == part.cycle; });
        if (it == a.parts.end() || !divides(it->f, part.f)) return false;
    }
    return true;
}

IdealRep sum(const Graph& g, const PairLattice& lattice, const IdealRep& a, const IdealRep& b) {
    if (!(a.field == b.field)) throw InvalidArgument("ideals over different fields");
    std::vector<PolyPart> parts = a.parts;
    for (const auto& part : b.parts) {
        auto it = std::find_if(parts.begin(), parts.end(), [&](const PolyPart& p) { return p.cycle == part.cycle; });
        if (it == parts.end()) {
            parts.push_back(part);
        } else {
            it->f = gcd(it->f, part.f);
        }
    }
    return canonicalize(g, lattice, lattice.join(a.pair, b.pair), std::move(parts), a.field);
}

IdealRep intersect(const Graph& g, const PairLattice& lattice, const IdealRep& a, const IdealRep& b) {
    if (contains(a, b)) return b;
    if (contains(b, a)) return a;
    if (is_graded(a) && is_graded(b)) return IdealRep::graded(lattice.meet(a.pair, b.pair), a.field);
    const bool same_cycles =
        a.parts.size() == b.parts.size() &&
        std::equal(a.parts.begin(), a.parts.end(), b.parts.begin(),
                   [](const PolyPart& x, const PolyPart& y) { return x.cycle == y.cycle; });
    if (a.pair == b.pair && same_cycles) {
        std::vector<PolyPart> parts = a.parts;
        for (std::size_t k = 0; k < parts.size(); ++k) parts[k].f = lcm(parts[k].f, b.parts[k].f);
        return canonicalize(g, lattice, a.pair, std::move(parts), a.field);
    }
    throw Unsupported("intersection of " + describe(g, a) + " and " + describe(g, b) + " is outside the supported shapes");
}

std::string describe(const Graph& g, const IdealRep& i) {
    std::string out = "I(" + set_string(g, i.pair.h) + "," + set_string(g, i.pair.s) + ")";
    for (const auto& p : i.parts) out += " + <" + p.f.to_string() + " @ " + cycle_string(g, p.cycle) + ">";
    return out;
}

}  // namespace lpa
