#include "qising/sequences.hpp"

#include <cmath>

namespace qising::sequences {

Word Word::from_string(const std::string& s) {
    std::vector<bool> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c == 'a') bits.push_back(false);
        else if (c == 'b') bits.push_back(true);
        else throw std::invalid_argument("word characters must be 'a' or 'b'");
    }
    return Word(std::move(bits));
}

std::string Word::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? 'b' : 'a');
    return s;
}

void CouplingMap::validate() const {
    if (!(p_a > 0) || !(p_b > 0))
        throw std::invalid_argument("couplings p_a, p_b must be positive");
    if (q_a < 0 || q_b < 0)
        throw std::invalid_argument("fields q_a, q_b must be non-negative");
}

std::vector<std::int64_t> fibonacci_numbers(int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
    if (k_max > 90) throw std::invalid_argument("k_max > 90 would overflow int64");
    std::vector<std::int64_t> F;
    F.reserve(k_max + 1);
    F.push_back(1);
    if (k_max >= 1) F.push_back(1);
    for (int k = 2; k <= k_max; ++k) F.push_back(F[k - 1] + F[k - 2]);
    return F;
}

std::int64_t fibonacci(int k) {
    if (k < 0 || k > 90) throw std::invalid_argument("fibonacci index out of range");
    std::int64_t a = 1, b = 1;
    for (int i = 2; i <= k; ++i) {
        std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return b;
}

Word substitution_word(int gen) {
    if (gen < 1) throw std::invalid_argument("generation must be >= 1");
    if (gen > 35) throw std::invalid_argument("generation > 35 exceeds the memory budget");
    // w_{k+1} = w_k . w_{k-1}; build by extending the prefix in place.
    std::vector<bool> w = {false};        // gen 1: "a"
    std::size_t prev_len = 0;             // F_0-prefix length placeholder
    std::size_t cur_len = 1;
    if (gen >= 2) {
        w.push_back(true);                // gen 2: "ab"
        prev_len = 1;
        cur_len = 2;
    }
    for (int g = 3; g <= gen; ++g) {
        // append the length-F_{g-2} prefix
        for (std::size_t i = 0; i < prev_len; ++i) w.push_back(w[i]);
        std::size_t next = cur_len + prev_len;
        prev_len = cur_len;
        cur_len = next;
    }
    return Word(std::move(w), gen);
}

Word rotation_word(std::int64_t n, double offset) {
    if (n < 1) throw std::invalid_argument("rotation word length must be >= 1");
    const long double phi = 1.61803398874989484820458683436563811L;
    const long double lo = 2.0L - phi;  // 'a' iff frac in [2-phi, 1)
    long double off = offset;
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        long double v = std::fmod(static_cast<long double>(i) * phi + off, 1.0L);
        if (v < 0) v += 1.0L;
        bits.push_back(v < lo);  // true = b
    }
    return Word(std::move(bits));
}

std::pair<std::int64_t, std::int64_t> letter_counts(const Word& w) {
    std::int64_t nb = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.at(i) == Symbol::B) ++nb;
    return {static_cast<std::int64_t>(w.size()) - nb, nb};
}

std::vector<double> modulate(const Word& w, double value_a, double value_b) {
    std::vector<double> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out.push_back(w.at(i) == Symbol::A ? value_a : value_b);
    return out;
}

}  // namespace qising::sequences
