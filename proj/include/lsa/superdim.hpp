#ifndef LSA_SUPERDIM_HPP
#define LSA_SUPERDIM_HPP

#include <cstdint>
#include <string>

namespace lsa {

/// Graded dimension (even | odd).
struct SuperDim {
    long even = 0;
    long odd = 0;

    long total() const { return even + odd; }

    SuperDim operator+(SuperDim o) const { return {even + o.even, odd + o.odd}; }
    SuperDim operator-(SuperDim o) const { return {even - o.even, odd - o.odd}; }
    bool operator==(const SuperDim&) const = default;

    std::string str() const {
        return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
    }
};

/// Tensor product of graded dimensions: (a|b).(c|d) = (ac+bd | ad+bc).
inline SuperDim module_tensor(SuperDim a, SuperDim b) {
    return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

} // namespace lsa

#endif
