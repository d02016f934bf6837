#ifndef LSA_FORMAT_HPP
#define LSA_FORMAT_HPP

#include "lsa/superalgebra.hpp"

#include <stdexcept>
#include <string>

namespace lsa {

/// Parse or validation failure in a `.lsa` file; carries a 1-based line
/// number (0 when no single line is at fault).
class FileError : public std::runtime_error {
public:
    FileError(std::size_t line, const std::string& msg)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses the `.lsa` text format:
///
///   lsa 1
///   even 2
///   odd 0
///   char 0
///   [1,2] = 3:1
///
/// Indices are 1-based and global (even basis vectors first).  Only one of
/// each unordered pair needs to be given; the loader completes the table by
/// graded skew-symmetry and rejects contradictions.  The result is fully
/// validated.
LieSuperAlgebra parse_algebra(const std::string& text, std::string name = "L",
                              bool run_validation = true);

/// Inverse of parse_algebra on the entries it emits.
std::string render_algebra(const LieSuperAlgebra& l);

LieSuperAlgebra load_algebra_file(const std::string& path);
void save_algebra_file(const LieSuperAlgebra& l, const std::string& path);

} // namespace lsa

#endif
