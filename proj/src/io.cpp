#include "lei/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace lei {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Algebra parse_algebra_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    bool have_field = false, have_dim = false;
    FieldSpec field = FieldSpec::rationals();
    std::size_t dim = 0;
    std::vector<std::tuple<int, std::size_t, std::size_t, std::string>> brackets;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_ws(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "field") {
            if (toks.size() != 3 || toks[1] != "=")
                throw ParseError(line_no, "expected 'field = <spec>'");
            if (have_field) throw ParseError(line_no, "duplicate field declaration");
            field = parse_field_spec(toks[2]);
            have_field = true;
        } else if (toks[0] == "dim") {
            if (toks.size() != 3 || toks[1] != "=")
                throw ParseError(line_no, "expected 'dim = <n>'");
            if (have_dim) throw ParseError(line_no, "duplicate dim declaration");
            try {
                long v = std::stol(toks[2]);
                if (v < 1) throw ParseError(line_no, "dim must be >= 1");
                dim = static_cast<std::size_t>(v);
            } catch (const std::logic_error&) {
                throw ParseError(line_no, "bad dimension: " + toks[2]);
            }
            have_dim = true;
        } else if (toks[0] == "bracket") {
            if (toks.size() < 5 || toks[3] != "=")
                throw ParseError(line_no, "expected 'bracket <i> <j> = <k>:<c> + ...'");
            auto parse_index = [&](const std::string& t) -> std::size_t {
                try {
                    long v = std::stol(t);
                    if (v < 1) throw ParseError(line_no, "index must be >= 1: " + t);
                    return static_cast<std::size_t>(v);
                } catch (const std::logic_error&) {
                    throw ParseError(line_no, "bad index: " + t);
                }
            };
            std::size_t i = parse_index(toks[1]);
            std::size_t j = parse_index(toks[2]);
            std::string rhs;
            for (std::size_t k = 4; k < toks.size(); ++k) rhs += toks[k] + " ";
            brackets.emplace_back(line_no, i, j, rhs);
        } else {
            throw ParseError(line_no, "unknown directive: " + toks[0]);
        }
    }
    if (!have_field) throw ParseError(line_no, "missing field declaration");
    if (!have_dim) throw ParseError(line_no, "missing dim declaration");

    Algebra alg(field, dim);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& [ln, i, j, rhs] : brackets) {
        if (i > dim || j > dim)
            throw ParseError(ln, "bracket index out of range [1," + std::to_string(dim) + "]");
        // rhs is "<k>:<c>" terms joined by '+'.
        std::string termbuf;
        std::vector<std::string> terms;
        for (char ch : rhs) {
            if (ch == '+') {
                terms.push_back(termbuf);
                termbuf.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                termbuf += ch;
            }
        }
        if (!termbuf.empty()) terms.push_back(termbuf);
        if (terms.empty()) throw ParseError(ln, "empty bracket right-hand side");
        for (const auto& term : terms) {
            auto colon = term.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == term.size())
                throw ParseError(ln, "bad term (expected <k>:<c>): " + term);
            std::size_t k = 0;
            try {
                long v = std::stol(term.substr(0, colon));
                if (v < 1 || static_cast<std::size_t>(v) > dim)
                    throw ParseError(ln, "component index out of range: " + term);
                k = static_cast<std::size_t>(v);
            } catch (const std::logic_error&) {
                throw ParseError(ln, "bad component index: " + term);
            }
            if (!seen.insert({i, j, k}).second)
                throw ParseError(ln, "duplicate entry for bracket " + std::to_string(i) +
                                         " " + std::to_string(j) + " component " +
                                         std::to_string(k));
            Scalar coeff;
            try {
                coeff = parse_scalar(field, term.substr(colon + 1));
            } catch (const BadField& e) {
                throw ParseError(ln, e.what());
            }
            alg.c(i - 1, j - 1, k - 1) = coeff;
        }
    }
    return alg;
}

std::string render_algebra_file(const Algebra& alg) {
    std::ostringstream out;
    out << "field = " << alg.field().str() << "\n";
    out << "dim = " << alg.dim() << "\n";
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            bool any = false;
            std::ostringstream rhs;
            for (std::size_t k = 0; k < alg.dim(); ++k) {
                if (alg.c(i, j, k).is_zero()) continue;
                if (any) rhs << " + ";
                rhs << (k + 1) << ":" << alg.c(i, j, k).str();
                any = true;
            }
            if (any)
                out << "bracket " << (i + 1) << " " << (j + 1) << " = " << rhs.str()
                    << "\n";
        }
    return out.str();
}

std::string render_vector(const Vector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + "]";
}

std::string render_subspace(const Subspace& s) {
    if (s.is_zero()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i) out += ";";
        out += render_vector(s.basis_vector(i));
    }
    return out;
}

void Report::add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

std::string Report::str() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
    return out;
}

Report invariants_report(const Algebra& alg) {
    Report r;
    r.add("dim", std::to_string(alg.dim()));
    r.add("is_lie", is_lie(alg) ? "true" : "false");
    r.add("leib", render_subspace(leibniz_kernel(alg)));
    r.add("left_center", render_subspace(left_center(alg)));
    r.add("right_center", render_subspace(right_center(alg)));
    r.add("center", render_subspace(center(alg)));
    r.add("derived", render_subspace(derived_subalgebra(alg)));
    auto render_series = [](const std::vector<Subspace>& series) {
        std::string out;
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (i) out += " | ";
            out += render_subspace(series[i]);
        }
        return out;
    };
    r.add("lower_series", render_series(lower_central_series(alg)));
    r.add("upper_series", render_series(upper_central_series(alg)));
    auto ncl = nilpotency_class(alg);
    r.add("ncl", ncl ? std::to_string(*ncl) : "not_nilpotent");
    return r;
}

std::string render_matrix_flat(const Matrix& m) {
    std::string row;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!row.empty()) row += " ";
            row += m.at(i, j).str();
        }
    return row;
}

Report theorem_report(const TheoremReport& t) {
    Report r;
    r.add("g_order", std::to_string(t.g_order));
    r.add("s_order", std::to_string(t.s_order));
    r.add("t_order", std::to_string(t.t_order));
    r.add("j_order", std::to_string(t.j_order));
    r.add("d_order", std::to_string(t.d_order));
    for (std::size_t i = 0; i < t.claims.size(); ++i)
        r.add("claim_" + std::to_string(i + 1), t.claims[i].second ? "pass" : "fail");
    return r;
}

}  // namespace lei
