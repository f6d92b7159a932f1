#ifndef LEI_IO_HPP
#define LEI_IO_HPP

#include "lei/lei3.hpp"

#include <string>
#include <vector>

namespace lei {

/// Line-based algebra file:
///   field = Q | F<p>
///   dim = <n>
///   bracket <i> <j> = <k1>:<c1> + <k2>:<c2> + ...
/// '#' starts a comment, blank lines are ignored, indices are 1-based,
/// unspecified brackets are zero. Duplicate (i,j,k) entries are an error.
Algebra parse_algebra_file(const std::string& text);

std::string render_algebra_file(const Algebra& alg);

std::string render_vector(const Vector& v);

/// Basis rows of the canonical RREF, "[..];[..]"; "(empty)" for the zero
/// subspace.
std::string render_subspace(const Subspace& s);

/// Ordered key/value lines, rendered as "key = value\n" each.
class Report {
public:
    void add(const std::string& key, const std::string& value);
    const std::vector<std::pair<std::string, std::string>>& entries() const {
        return entries_;
    }
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

Report invariants_report(const Algebra& alg);
Report theorem_report(const TheoremReport& r);

/// Entries of a matrix, row-major, space-separated canonical scalars.
std::string render_matrix_flat(const Matrix& m);

}  // namespace lei

#endif
