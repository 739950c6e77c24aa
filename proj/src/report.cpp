#include "sagbi/report.hpp"

#include <json.hpp>
#include <limits>
#include <sstream>

#include "sagbi/basis.hpp"
#include "sagbi/cone.hpp"
#include "sagbi/error.hpp"
#include "sagbi/poly.hpp"
#include "sagbi/rational.hpp"

namespace sagbi {

namespace {

using nlohmann::json;

json rat_json(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(num);
    return rat_string(r);
}

json rat_vector_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rat_json(r));
    return a;
}

json expo_json(const Expo& u) {
    return json(u);
}

json poly_json(const Poly& p) {
    json a = json::array();
    for (const auto& [u, c] : p.terms()) a.push_back({{"coeff", c}, {"exps", u}});
    return a;
}

json witness_json(const Witness& w) {
    return json{{"point", rat_vector_json(w.point)},
                {"direction", rat_vector_json(w.direction)},
                {"s_max", rat_string(w.s_max)},
                {"t_star", rat_string(w.t_star)},
                {"sigma", w.translate.cycle_string()},
                {"pair", {w.obstruction_pair.first, w.obstruction_pair.second}}};
}

std::string orbits_string(const PermGroup& g) {
    std::string out;
    for (const auto& orbit : g.orbits) {
        if (!out.empty()) out += " ";
        out += "{";
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(orbit[i] + 1);
        }
        out += "}";
    }
    return out;
}

json orbits_json(const PermGroup& g) {
    json a = json::array();
    for (const auto& orbit : g.orbits) {
        json o = json::array();
        for (int p : orbit) o.push_back(p + 1);
        a.push_back(o);
    }
    return a;
}

std::string label_string(const std::pair<int, int>& label) {
    return "e_" + std::to_string(label.second) + "(S_" + std::to_string(label.first) + ")";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string witness_text(const Witness& w) {
    std::ostringstream out;
    out << "witness point:     " << rat_vector_string(w.point) << "\n"
        << "witness direction: " << rat_vector_string(w.direction) << "\n"
        << "witness s_max:     " << rat_string(w.s_max) << "\n"
        << "witness t_star:    " << rat_string(w.t_star) << "\n"
        << "witness sigma:     " << w.translate.cycle_string() << "\n"
        << "obstruction pair:  (" << w.obstruction_pair.first << ","
        << w.obstruction_pair.second << ")\n";
    return out.str();
}

}  // namespace

Session make_session(const std::string& group_text, const std::string& order_spec,
                     const std::string& order_matrix_text, int n_override,
                     std::int64_t cap) {
    if (cap <= 0) cap = 1'000'000;
    PermGroup group = parse_group_text(group_text, n_override, cap);
    if (order_spec == "matrix") {
        TermOrder order = TermOrder::parse_matrix_text(order_matrix_text);
        if (order.degree() != group.n)
            fail(ErrorCode::Parse, "order matrix degree " + std::to_string(order.degree()) +
                                       " does not match group degree " +
                                       std::to_string(group.n));
        return {std::move(group), std::move(order)};
    }
    TermOrder order = TermOrder::from_spec(order_spec, group.n);
    return {std::move(group), std::move(order)};
}

std::string report_analyze(const Session& s, int max_degree, Format f) {
    FinitenessVerdict v = finiteness_verdict(s.group, s.order, max_degree);

    if (f == Format::Json) {
        json j{{"n", s.group.n},
               {"order", s.order.kind_name()},
               {"group_order", s.group.elements.size()},
               {"orbits", orbits_json(s.group)},
               {"reflection_generated", v.certificate.verdict},
               {"finite", v.finite}};
        if (v.certificate.verdict) {
            json t = json::array();
            for (const auto& [a, b] : v.certificate.transpositions) t.push_back({a, b});
            j["transpositions"] = t;
        } else {
            j["obstruction"] = {v.certificate.obstruction->first,
                                v.certificate.obstruction->second};
        }
        if (v.finite) {
            json basis = json::array();
            for (std::size_t i = 0; i < v.basis->polys.size(); ++i)
                basis.push_back({{"orbit", v.basis->labels[i].first},
                                 {"degree", v.basis->labels[i].second},
                                 {"poly", poly_json(v.basis->polys[i])}});
            j["basis"] = basis;
        } else {
            j["witness"] = witness_json(*v.witness);
            json counts = json::array();
            for (const auto& [d, c] : v.irreducible_counts) counts.push_back({d, c});
            j["irreducible_counts"] = counts;
        }
        return dump(j);
    }

    std::ostringstream out;
    out << "degree:            " << s.group.n << "\n"
        << "order:             " << s.order.kind_name() << "\n"
        << "group order:       " << s.group.elements.size() << "\n"
        << "orbits:            " << orbits_string(s.group) << "\n"
        << "reflection group:  " << (v.certificate.verdict ? "yes" : "no") << "\n";
    if (!v.certificate.verdict)
        out << "obstruction pair:  (" << v.certificate.obstruction->first << ","
            << v.certificate.obstruction->second << ")\n";
    if (v.finite) {
        out << "sagbi basis:       finite (comprehensive basis below)\n";
        for (std::size_t i = 0; i < v.basis->polys.size(); ++i)
            out << "  " << label_string(v.basis->labels[i]) << " = "
                << v.basis->polys[i].str() << "\n";
    } else {
        out << "sagbi basis:       infinite for every admissible term order\n";
        out << witness_text(*v.witness);
        out << "irreducible counts by degree:";
        for (const auto& [d, c] : v.irreducible_counts) out << " " << d << ":" << c;
        out << "\n";
    }
    return out.str();
}

std::string report_basis(const Session& s, int max_degree, Format f) {
    InitialCone cone(s.group, s.order);
    auto elements = minimal_sagbi_up_to(cone, max_degree);

    if (f == Format::Json) {
        json elems = json::array();
        for (const auto& e : elements)
            elems.push_back({{"degree", e.degree},
                             {"exponent", expo_json(e.exponent)},
                             {"orbit_sum", poly_json(e.polynomial)}});
        json counts = json::array();
        for (int d = 1; d <= max_degree; ++d) {
            std::int64_t c = 0;
            for (const auto& e : elements)
                if (e.degree == d) ++c;
            counts.push_back({d, c});
        }
        return dump(json{{"max_degree", max_degree},
                         {"elements", elems},
                         {"counts", counts}});
    }

    std::ostringstream out;
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<const SagbiElement*> at;
        for (const auto& e : elements)
            if (e.degree == d) at.push_back(&e);
        out << "degree " << d << " (" << at.size() << " element"
            << (at.size() == 1 ? "" : "s") << ")\n";
        for (const auto* e : at) {
            out << "  x^(";
            for (std::size_t i = 0; i < e->exponent.size(); ++i) {
                if (i) out << ",";
                out << e->exponent[i];
            }
            out << ")  ->  " << e->polynomial.str() << "\n";
        }
    }
    return out.str();
}

std::string report_member(const Session& s, const std::string& vector_csv, Format f) {
    std::vector<Rat> u = parse_rational_vector(vector_csv);
    if (static_cast<int>(u.size()) != s.group.n)
        fail(ErrorCode::Parse, "vector has " + std::to_string(u.size()) +
                                   " entries, expected " + std::to_string(s.group.n));
    for (const auto& e : u)
        if (e < 0) fail(ErrorCode::Parse, "vector entries must be nonnegative");

    InitialCone cone(s.group, s.order);
    bool member = cone.contains(u);
    if (f == Format::Json)
        return dump(json{{"vector", rat_vector_json(u)}, {"member", member}});
    std::ostringstream out;
    out << rat_vector_string(u) << (member ? " is in" : " is NOT in")
        << " the initial cone\n";
    return out.str();
}

std::string report_witness(const Session& s, Format f) {
    InitialCone cone(s.group, s.order);
    auto w = cone.nonclosedness_witness();
    if (!w)
        fail(ErrorCode::Usage,
             "cone closed; no witness: the group is reflection-generated and the "
             "SAGBI basis is finite");
    if (f == Format::Json) return dump(witness_json(*w));
    return witness_text(*w);
}

std::string report_sturm(const std::string& slope, std::int64_t x_max, Format f) {
    Rat a = parse_rational(slope);
    auto irr = halfplane_irreducibles(a, x_max);
    if (f == Format::Json) {
        json pts = json::array();
        for (const auto& [x, y] : irr) pts.push_back({x, y});
        return dump(json{{"slope", rat_string(a)}, {"x_max", x_max},
                         {"irreducibles", pts}});
    }
    std::ostringstream out;
    for (const auto& [x, y] : irr) out << "(" << x << "," << y << ")\n";
    return out.str();
}

}  // namespace sagbi
