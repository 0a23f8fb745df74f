#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qising::sequences {

enum class Symbol : uint8_t { A = 0, B = 1 };

/// Finite word over {a,b}. Bit-packed; generation is set when the word is
/// S^{k-1}(a) for the Fibonacci substitution S: a -> ab, b -> a.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<bool> bits, std::optional<int> generation = std::nullopt)
        : bits_(std::move(bits)), generation_(generation) {}
    static Word from_string(const std::string& s);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    Symbol at(std::size_t i) const { return bits_[i] ? Symbol::B : Symbol::A; }
    std::optional<int> generation() const { return generation_; }

    std::string str() const;
    bool operator==(const Word& o) const { return bits_ == o.bits_; }

private:
    std::vector<bool> bits_;
    std::optional<int> generation_;
};

/// Two-valued coupling / field map attached to the alphabet.
struct CouplingMap {
    double p_a = 1.0;  // interaction, symbol a (> 0)
    double p_b = 1.0;  // interaction, symbol b (> 0)
    double q_a = 0.0;  // field, symbol a (>= 0)
    double q_b = 0.0;  // field, symbol b (>= 0)

    void validate() const;
    double p(Symbol s) const { return s == Symbol::A ? p_a : p_b; }
    double q(Symbol s) const { return s == Symbol::A ? q_a : q_b; }
};

/// F_0..F_kmax with F_0 = F_1 = 1. Rejects kmax > 90 (would overflow).
std::vector<std::int64_t> fibonacci_numbers(int k_max);

/// F_k for a single k.
std::int64_t fibonacci(int k);

/// S^{gen-1}(a); length F_gen. gen in [1, 35] (memory guard).
Word substitution_word(int gen);

/// Length-n sample of the golden-mean circle rotation with phase offset in [0,1).
/// Letter a iff frac(n*phi + offset) lies in [2-phi, 1); offset 0 reproduces
/// prefixes of the substitution fixed point.
Word rotation_word(std::int64_t n, double offset);

/// (#a, #b).
std::pair<std::int64_t, std::int64_t> letter_counts(const Word& w);

/// Elementwise substitution of symbols by values, order preserved.
std::vector<double> modulate(const Word& w, double value_a, double value_b);

}  // namespace qising::sequences
