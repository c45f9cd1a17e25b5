#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modlap {

// Maps step index i (1-based) to the modulus applied when producing state i.
//
// The two_n_two_two family applies n at steps i = 2 (mod 4) and 2 everywhere
// else, so its modulus string reads 2,n,2,2,2,n,2,2,...  two_n_two_two(2) is
// pointwise equal to constant(2).
class Schedule {
public:
    enum class Kind { constant, two_n_two_two, explicit_list };

    static Schedule constant(int32_t n);
    static Schedule two_n_two_two(int32_t n);
    static Schedule explicit_list(std::vector<int32_t> moduli);

    // Accepted spec strings:
    //   "2222", "2322", ... "2922"   digit shorthand for two_n_two_two(n)
    //                                ("2222" parses as constant(2))
    //   "2n22:N"                     two_n_two_two(N)
    //   "const:N"                    constant(N)
    //   "explicit:a,b,c"             explicit list
    static Schedule parse(std::string_view spec);

    // Modulus used by the step that produces state i from state i-1; i >= 1.
    // Indexing past the end of an explicit list is an error.
    int32_t modulus_at(int64_t i) const;

    Kind kind() const { return kind_; }
    int32_t n() const { return n_; }

    // Number of steps an explicit list can serve; nullopt for unbounded kinds.
    std::optional<int64_t> length() const;

    // The spec string this schedule was parsed from (or a canonical synthesis).
    const std::string& spec_string() const { return spec_; }

private:
    Schedule(Kind kind, int32_t n, std::vector<int32_t> list, std::string spec);

    Kind kind_;
    int32_t n_;
    std::vector<int32_t> list_;
    std::string spec_;
};

} // namespace modlap
