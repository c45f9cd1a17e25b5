#include "core/schedule.hpp"

#include <charconv>

#include "core/error.hpp"

namespace modlap {

namespace {

int32_t parse_modulus(std::string_view text, std::string_view what) {
    int32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail(ErrorCode::parse, std::string(what) + ": '" + std::string(text) + "' is not an integer");
    if (value < 2)
        fail(ErrorCode::invalid_argument, std::string(what) + ": modulus must be at least 2");
    return value;
}

} // namespace

Schedule::Schedule(Kind kind, int32_t n, std::vector<int32_t> list, std::string spec)
    : kind_(kind), n_(n), list_(std::move(list)), spec_(std::move(spec)) {}

Schedule Schedule::constant(int32_t n) {
    if (n < 2) fail(ErrorCode::invalid_argument, "schedule modulus must be at least 2");
    return Schedule(Kind::constant, n, {}, "const:" + std::to_string(n));
}

Schedule Schedule::two_n_two_two(int32_t n) {
    if (n < 2) fail(ErrorCode::invalid_argument, "schedule modulus must be at least 2");
    std::string spec = n <= 9 ? "2" + std::to_string(n) + "22" : "2n22:" + std::to_string(n);
    return Schedule(Kind::two_n_two_two, n, {}, std::move(spec));
}

Schedule Schedule::explicit_list(std::vector<int32_t> moduli) {
    if (moduli.empty()) fail(ErrorCode::invalid_argument, "explicit schedule is empty");
    std::string spec = "explicit:";
    for (size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 2) fail(ErrorCode::invalid_argument, "schedule modulus must be at least 2");
        if (i) spec += ',';
        spec += std::to_string(moduli[i]);
    }
    return Schedule(Kind::explicit_list, 0, std::move(moduli), std::move(spec));
}

Schedule Schedule::parse(std::string_view spec) {
    if (spec.size() == 4 && spec[0] == '2' && spec[2] == '2' && spec[3] == '2' &&
        spec[1] >= '2' && spec[1] <= '9') {
        const int32_t n = spec[1] - '0';
        return n == 2 ? constant(2) : two_n_two_two(n);
    }
    if (spec.rfind("2n22:", 0) == 0)
        return two_n_two_two(parse_modulus(spec.substr(5), "2n22 schedule"));
    if (spec.rfind("const:", 0) == 0)
        return constant(parse_modulus(spec.substr(6), "constant schedule"));
    if (spec.rfind("explicit:", 0) == 0) {
        std::vector<int32_t> moduli;
        std::string_view rest = spec.substr(9);
        while (!rest.empty()) {
            const size_t comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            moduli.push_back(parse_modulus(item, "explicit schedule"));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (moduli.empty()) fail(ErrorCode::parse, "explicit schedule lists no moduli");
        return explicit_list(std::move(moduli));
    }
    fail(ErrorCode::parse, "unrecognized schedule spec '" + std::string(spec) +
                               "' (expected e.g. 2222, 2322, 2n22:5, const:3, explicit:2,3,2,2)");
}

int32_t Schedule::modulus_at(int64_t i) const {
    if (i < 1) fail(ErrorCode::invalid_argument, "step index must be at least 1");
    switch (kind_) {
        case Kind::constant:
            return n_;
        case Kind::two_n_two_two:
            return (i % 4 == 2) ? n_ : 2;
        case Kind::explicit_list:
            if (i > static_cast<int64_t>(list_.size()))
                fail(ErrorCode::range, "step index " + std::to_string(i) +
                                           " past the end of an explicit schedule of length " +
                                           std::to_string(list_.size()));
            return list_[static_cast<size_t>(i - 1)];
    }
    fail(ErrorCode::invalid_argument, "corrupt schedule kind");
}

std::optional<int64_t> Schedule::length() const {
    if (kind_ == Kind::explicit_list) return static_cast<int64_t>(list_.size());
    return std::nullopt;
}

} // namespace modlap
