#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliquelab {

// Raised for malformed input files; message names the offending line/token.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an argument is outside an operation's domain.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a build or solve would exceed the configured token budget.
struct budget_error : std::runtime_error {
    budget_error(const std::string& msg, const std::string& computed_length)
        : std::runtime_error(msg), length(computed_length) {}
    std::string length;  // decimal token count that triggered the refusal
};

// Deterministic 64-bit generator (splitmix64). Standard-library distributions
// are not bit-reproducible across implementations; seeded corpora and golden
// files require stable streams.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0,n), rejection-free modulo is fine at our scales.
    uint64_t next_below(uint64_t n) { return n ? next() % n : 0; }

  private:
    uint64_t state_;
};

inline int64_t ceil_log2(int64_t n) {
    int64_t b = 0;
    while ((int64_t(1) << b) < n) ++b;
    return b;
}

// FNV-1a 64-bit content digest, rendered as 16 hex chars.
inline std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace cliquelab
