#include "lss/ideal.hpp"

#include "lss/decomposition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace lss {

std::vector<size_t> GeneratorSet::level_counts() const {
    std::vector<size_t> counts;
    for (const auto& level : levels) counts.push_back(level.size());
    return counts;
}

std::vector<Polynomial> edge_generators(const Forest& f, int d) {
    std::vector<Polynomial> gens;
    for (const auto& [i, j] : f.edges()) {
        std::vector<Polynomial::Term> terms;
        for (int k = 1; k <= d; ++k)
            terms.push_back({Monomial::var({i, k}) * Monomial::var({j, k}),
                             BigInt(1)});
        gens.push_back(from_terms(std::move(terms)));
    }
    return gens;
}

namespace {

Polynomial det_recursive(const std::vector<Vertex>& rows,
                         const std::vector<int>& cols, size_t row_idx) {
    if (row_idx == rows.size()) return Polynomial::constant(1);
    Polynomial sum;
    for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(c));
        Polynomial cofactor =
            Polynomial::var({rows[row_idx], cols[c]}) *
            det_recursive(rows, rest, row_idx + 1);
        sum = (c % 2 == 0) ? sum + cofactor : sum - cofactor;
    }
    return sum;
}

} // namespace

Polynomial symbolic_det(const std::vector<Vertex>& rows, int d) {
    if (static_cast<int>(rows.size()) != d)
        throw ShapeMismatch("determinant needs exactly d rows");
    std::vector<int> cols(d);
    for (int c = 0; c < d; ++c) cols[c] = c + 1;
    return det_recursive(rows, cols, 0);
}

std::vector<Polynomial> signed_minors(const std::vector<Vertex>& rows, int d) {
    if (static_cast<int>(rows.size()) != d - 1)
        throw ShapeMismatch("signed minors need exactly d-1 rows");
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = a + 1; b < rows.size(); ++b)
            if (rows[a] == rows[b]) throw DuplicateRow("repeated row vertex");
    std::vector<Polynomial> minors;
    for (int j = 1; j <= d; ++j) {
        std::vector<int> cols;
        for (int c = 1; c <= d; ++c)
            if (c != j) cols.push_back(c);
        Polynomial det = det_recursive(rows, cols, 0);
        minors.push_back(j % 2 == 1 ? -det : det);
    }
    return minors;
}

Polynomial substitute_row(const Polynomial& p, Vertex i,
                          const std::vector<Polynomial>& minors) {
    const int d = static_cast<int>(minors.size());
    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        Polynomial factor = Polynomial::constant(c);
        std::vector<Polynomial::Term> rest{{Monomial{}, BigInt(1)}};
        for (const auto& [v, e] : m.factors()) {
            if (v.i == i) {
                if (v.j < 1 || v.j > d)
                    throw ShapeMismatch("variable coordinate outside [d]");
                for (int k = 0; k < e; ++k) factor = factor * minors[v.j - 1];
            } else {
                rest[0].first = rest[0].first * Monomial::var(v, e);
            }
        }
        result += factor * from_terms(rest);
    }
    return result.canonicalized();
}

namespace {

// All (d-1)-subsets of each sufficiently large neighborhood, as (i, T) pairs.
std::vector<std::pair<Vertex, std::vector<Vertex>>> substitution_pairs(
    const Forest& f, int d) {
    std::vector<std::pair<Vertex, std::vector<Vertex>>> pairs;
    for (Vertex i = 1; i <= f.vertex_count(); ++i) {
        if (f.degree(i) < d - 1) continue;
        std::vector<Vertex> nb(f.neighborhood(i).begin(),
                               f.neighborhood(i).end());
        const int m = static_cast<int>(nb.size());
        std::vector<int> pick(d - 1);
        for (int k = 0; k < d - 1; ++k) pick[k] = k;
        while (true) {
            std::vector<Vertex> t;
            for (int k = 0; k < d - 1; ++k) t.push_back(nb[pick[k]]);
            pairs.push_back({i, t});
            int k = d - 2;
            while (k >= 0 && pick[k] == m - (d - 1) + k) --k;
            if (k < 0) break;
            ++pick[k];
            for (int l = k + 1; l < d - 1; ++l) pick[l] = pick[l - 1] + 1;
        }
    }
    return pairs;
}

} // namespace

GeneratorSet ideal_closure(const Forest& f, int d, int depth, size_t level_cap) {
    if (depth < 0) throw Error("depth must be nonnegative");
    GeneratorSet out;
    out.depth = depth;
    PolynomialSet current;
    for (const auto& g : edge_generators(f, d))
        current.insert(g.canonicalized());
    out.levels.push_back(current);

    auto pairs = substitution_pairs(f, d);
    std::vector<std::pair<Vertex, std::vector<Polynomial>>> minors;
    for (const auto& [i, t] : pairs) minors.push_back({i, signed_minors(t, d)});

    for (int level = 1; level <= depth; ++level) {
        PolynomialSet next = current;
        for (const auto& p : current) {
            for (const auto& [i, m] : minors) {
                if (!p.involves_row(i)) continue;
                Polynomial q = substitute_row(p, i, m);
                if (q.is_zero()) continue;
                next.insert(std::move(q));
                if (next.size() > level_cap)
                    throw Exploded("generator count at level " +
                                   std::to_string(level) + " exceeds cap of " +
                                   std::to_string(level_cap));
            }
        }
        out.levels.push_back(next);
        current = std::move(next);
    }
    return out;
}

ComponentIdeal component_ideal(const Forest& f, int d, const VertexSet& s,
                               int depth) {
    ComponentIdeal ideal;
    ideal.S = s;
    ideal.d = d;
    VertexSet comp;
    for (Vertex i = 1; i <= f.vertex_count(); ++i)
        if (!s.count(i)) comp.insert(i);
    // V_S is a component only for admissible S.
    if (!is_admissible(f, d, s))
        throw NotAdmissible("subset is not admissible");
    for (Vertex i : s)
        for (int j = 1; j <= d; ++j)
            ideal.linear_generators.push_back({i, j});
    ideal.closure = ideal_closure(f.induced_subgraph(comp), d, depth);
    return ideal;
}

namespace {

std::string m2_name(Variable v) {
    return "x_(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

std::string singular_name(Variable v) {
    return "x(" + std::to_string(v.i) + ")(" + std::to_string(v.j) + ")";
}

nlohmann::json poly_to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json t;
        nlohmann::json mono = nlohmann::json::object();
        for (const auto& [v, e] : m.factors())
            mono[std::to_string(v.i) + "," + std::to_string(v.j)] = e;
        t["monomial"] = mono;
        t["coeff"] = c.get_str();
        terms.push_back(t);
    }
    return terms;
}

std::string export_impl(const std::vector<Polynomial>& gens,
                        const std::vector<Variable>& linear, int n, int d,
                        ExportFormat format) {
    std::ostringstream os;
    switch (format) {
    case ExportFormat::M2: {
        os << "-- polynomial ring QQ[x_(i,j)], i in 1.." << n << ", j in 1.."
           << d << "\n";
        os << "R = QQ[x_(1,1)..x_(" << n << "," << d << ")];\n";
        os << "I = ideal(";
        bool first = true;
        for (const auto& v : linear) {
            os << (first ? "" : ",\n  ") << m2_name(v);
            first = false;
        }
        for (const auto& g : gens) {
            os << (first ? "" : ",\n  ") << g.to_string(m2_name);
            first = false;
        }
        if (first) os << "0_R";
        os << ");\n";
        break;
    }
    case ExportFormat::Singular: {
        os << "// polynomial ring over QQ in x(i)(j), i in 1.." << n
           << ", j in 1.." << d << "\n";
        os << "ring R = 0, (x(1.." << n << ")(1.." << d << ")), dp;\n";
        os << "ideal I = ";
        bool first = true;
        for (const auto& v : linear) {
            os << (first ? "" : ",\n  ") << singular_name(v);
            first = false;
        }
        for (const auto& g : gens) {
            os << (first ? "" : ",\n  ") << g.to_string(singular_name);
            first = false;
        }
        if (first) os << "0";
        os << ";\n";
        break;
    }
    case ExportFormat::Json: {
        nlohmann::json j;
        j["vars"] = {{"n", n}, {"d", d}};
        j["generators"] = nlohmann::json::array();
        for (const auto& v : linear)
            j["generators"].push_back(poly_to_json(Polynomial::var(v)));
        for (const auto& g : gens) j["generators"].push_back(poly_to_json(g));
        os << j.dump(2) << "\n";
        break;
    }
    }
    return os.str();
}

} // namespace

ExportFormat parse_export_format(const std::string& name) {
    if (name == "m2" || name == "M2") return ExportFormat::M2;
    if (name == "singular" || name == "Singular") return ExportFormat::Singular;
    if (name == "json" || name == "JSON") return ExportFormat::Json;
    throw UnsupportedFormat("unknown export format '" + name + "'");
}

std::string export_generators(const std::vector<Polynomial>& gens, int n, int d,
                              ExportFormat format) {
    return export_impl(gens, {}, n, d, format);
}

std::string export_component_ideal(const ComponentIdeal& ideal, int n,
                                   ExportFormat format) {
    std::vector<Polynomial> gens(ideal.closure.top().begin(),
                                 ideal.closure.top().end());
    std::string body = export_impl(gens, ideal.linear_generators, n, ideal.d,
                                   format);
    if (ideal.closure_up_to_radical && format != ExportFormat::Json) {
        std::string note =
            format == ExportFormat::M2
                ? "-- the non-linear part generates the ideal only up to "
                  "radical\n"
                : "// the non-linear part generates the ideal only up to "
                  "radical\n";
        body = note + body;
    }
    return body;
}

} // namespace lss
