#pragma once

#include "hypernum/mult.hpp"
#include "hypernum/signlayer.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypernum {

/// A finite carrier with a total set-valued Cayley table.  Entries are
/// bitmasks over carrier indices; the carrier is capped at 64 elements
/// (the axiom checks enumerate up to |carrier|^3 triples).
struct FiniteHypermagma {
    std::vector<std::string> carrier;
    std::vector<std::uint64_t> table; // row-major, size() == carrier.size()^2

    std::size_t size() const { return carrier.size(); }

    std::uint64_t entry(std::size_t i, std::size_t j) const { return table[i * size() + j]; }
    std::uint64_t& entry(std::size_t i, std::size_t j) { return table[i * size() + j]; }

    std::optional<std::size_t> index_of(std::string_view label) const {
        for (std::size_t i = 0; i < carrier.size(); ++i)
            if (carrier[i] == label) return i;
        return std::nullopt;
    }

    std::string render_mask(std::uint64_t mask) const {
        std::string out = "{";
        bool first = true;
        for (std::size_t i = 0; i < size(); ++i) {
            if (!(mask >> i & 1u)) continue;
            if (!first) out += ", ";
            out += carrier[i];
            first = false;
        }
        return out + "}";
    }
};

/// Single-valued multiplication table over the same carrier, row-major
/// indices into the carrier.
using MulTable = std::vector<std::size_t>;

struct AxiomCounterexample {
    std::string axiom;
    std::vector<std::string> witness; // carrier labels involved
    std::string note;
};

/// Verdicts for the canonical-hypergroup axioms, each decided by
/// exhaustive enumeration.  Every false flag carries at least one
/// concrete counterexample.
struct AxiomReport {
    bool commutative = false;
    bool associative = false;
    std::optional<std::string> neutral;
    bool unique_inverses = false;
    bool reversible = false;
    std::vector<AxiomCounterexample> counterexamples;

    bool all_pass() const {
        return commutative && associative && neutral.has_value() && unique_inverses && reversible;
    }
};

struct HyperfieldReport {
    AxiomReport additive;
    bool zero_absorbing = false;
    bool units_group = false;
    bool distributive = false;
    std::vector<AxiomCounterexample> counterexamples;

    bool all_pass() const {
        return additive.all_pass() && zero_absorbing && units_group && distributive;
    }
};

namespace detail {

inline void validate_hypermagma(const FiniteHypermagma& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("hypermagma: empty carrier");
    if (n > 64) throw std::invalid_argument("hypermagma: carrier larger than 64 elements");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.carrier[i] == m.carrier[j])
                throw std::invalid_argument("hypermagma: duplicate carrier label '" + m.carrier[i] + "'");
    if (m.table.size() != n * n)
        throw std::invalid_argument("hypermagma: table is not total over carrier x carrier");
    const std::uint64_t valid = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t e = m.entry(i, j);
            if (e == 0)
                throw std::invalid_argument("hypermagma: empty entry at (" + m.carrier[i] + ", " +
                                            m.carrier[j] + ")");
            if (e & ~valid)
                throw std::invalid_argument("hypermagma: entry out of carrier range");
        }
}

inline void validate_mul_table(const FiniteHypermagma& m, const MulTable& mul) {
    const std::size_t n = m.size();
    if (mul.size() != n * n)
        throw std::invalid_argument("multiplication table is not total over carrier x carrier");
    for (std::size_t v : mul)
        if (v >= n) throw std::invalid_argument("multiplication table entry out of carrier range");
}

inline std::uint64_t onehot(std::size_t i) { return std::uint64_t{1} << i; }

// Union over u in `mask` of entry(u, k) (or entry(k, u) when from_left).
inline std::uint64_t fold_entry(const FiniteHypermagma& m, std::uint64_t mask, std::size_t k,
                                bool mask_on_left) {
    std::uint64_t out = 0;
    for (std::size_t u = 0; u < m.size(); ++u)
        if (mask >> u & 1u) out |= mask_on_left ? m.entry(u, k) : m.entry(k, u);
    return out;
}

} // namespace detail

/// Exhaustively decides the canonical-hypergroup axioms: commutativity,
/// associativity of the union-extended operation, existence of a
/// neutral element, uniqueness of inverses, and reversibility
/// (x in y+z iff z in x+(-y)).  Reversibility is reported false when no
/// unique inverse map exists.
inline AxiomReport check_axioms(const FiniteHypermagma& m) {
    detail::validate_hypermagma(m);
    const std::size_t n = m.size();
    AxiomReport report;

    report.commutative = true;
    for (std::size_t i = 0; i < n && report.commutative; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.entry(i, j) != m.entry(j, i)) {
                report.commutative = false;
                report.counterexamples.push_back(
                    {"commutativity",
                     {m.carrier[i], m.carrier[j]},
                     m.carrier[i] + " + " + m.carrier[j] + " = " + m.render_mask(m.entry(i, j)) +
                         " but " + m.carrier[j] + " + " + m.carrier[i] + " = " +
                         m.render_mask(m.entry(j, i))});
                break;
            }

    report.associative = true;
    for (std::size_t i = 0; i < n && report.associative; ++i)
        for (std::size_t j = 0; j < n && report.associative; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::uint64_t left = detail::fold_entry(m, m.entry(i, j), k, true);
                std::uint64_t right = detail::fold_entry(m, m.entry(j, k), i, false);
                if (left != right) {
                    report.associative = false;
                    report.counterexamples.push_back(
                        {"associativity",
                         {m.carrier[i], m.carrier[j], m.carrier[k]},
                         "(" + m.carrier[i] + " + " + m.carrier[j] + ") + " + m.carrier[k] + " = " +
                             m.render_mask(left) + " but " + m.carrier[i] + " + (" + m.carrier[j] +
                             " + " + m.carrier[k] + ") = " + m.render_mask(right)});
                    break;
                }
            }

    std::optional<std::size_t> neutral_index;
    for (std::size_t e = 0; e < n && !neutral_index; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = m.entry(e, x) == detail::onehot(x) && m.entry(x, e) == detail::onehot(x);
        if (ok) neutral_index = e;
    }
    if (neutral_index) {
        report.neutral = m.carrier[*neutral_index];
    } else {
        report.counterexamples.push_back(
            {"neutral element", {}, "no element e satisfies e + x = x + e = {x} for all x"});
    }

    std::vector<std::optional<std::size_t>> inverse(n);
    std::optional<std::size_t> bad_inverse; // first element without a unique inverse
    if (neutral_index) {
        report.unique_inverses = true;
        const std::uint64_t ebit = detail::onehot(*neutral_index);
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t count = 0;
            for (std::size_t y = 0; y < n; ++y)
                if (m.entry(x, y) & ebit) {
                    inverse[x] = y;
                    ++count;
                }
            if (count != 1) {
                if (report.unique_inverses) {
                    report.unique_inverses = false;
                    bad_inverse = x;
                    report.counterexamples.push_back(
                        {"unique inverses",
                         {m.carrier[x]},
                         m.carrier[x] + " has " + std::to_string(count) + " additive inverses"});
                }
                inverse[x] = std::nullopt;
            }
        }
    } else {
        report.counterexamples.push_back(
            {"unique inverses", {}, "requires a neutral element, and none exists"});
    }

    if (report.unique_inverses) {
        report.reversible = true;
        for (std::size_t rho = 0; rho < n && report.reversible; ++rho)
            for (std::size_t s1 = 0; s1 < n && report.reversible; ++s1)
                for (std::size_t s2 = 0; s2 < n; ++s2) {
                    bool forward = m.entry(s1, s2) >> rho & 1u;
                    bool backward = m.entry(rho, *inverse[s1]) >> s2 & 1u;
                    if (forward != backward) {
                        report.reversible = false;
                        report.counterexamples.push_back(
                            {"reversibility",
                             {m.carrier[rho], m.carrier[s1], m.carrier[s2]},
                             m.carrier[rho] + (forward ? " in " : " not in ") + m.carrier[s1] +
                                 " + " + m.carrier[s2] + " but " + m.carrier[s2] +
                                 (backward ? " in " : " not in ") + m.carrier[rho] + " + (-" +
                                 m.carrier[s1] + ")"});
                        break;
                    }
                }
    } else if (bad_inverse) {
        report.counterexamples.push_back(
            {"reversibility",
             {m.carrier[*bad_inverse]},
             "undecidable without unique inverses (" + m.carrier[*bad_inverse] +
                 " lacks a unique one); reported false"});
    } else {
        report.counterexamples.push_back(
            {"reversibility", {}, "undecidable without a neutral element; reported false"});
    }

    return report;
}

/// Hyperfield check: additive canonical-hypergroup axioms, absorbing
/// neutral, abelian group structure on the nonzero elements under the
/// single-valued multiplication, and two-sided distributivity of
/// multiplication over the hyperaddition (as set inclusions).
inline HyperfieldReport check_hyperfield(const FiniteHypermagma& m, const MulTable& mul) {
    detail::validate_hypermagma(m);
    detail::validate_mul_table(m, mul);
    const std::size_t n = m.size();

    HyperfieldReport report;
    report.additive = check_axioms(m);

    auto product = [&](std::size_t i, std::size_t j) { return mul[i * n + j]; };

    if (!report.additive.neutral) {
        report.counterexamples.push_back(
            {"hyperfield", {}, "no additive neutral element; multiplicative checks skipped"});
        return report;
    }
    const std::size_t zero = *m.index_of(*report.additive.neutral);

    report.zero_absorbing = true;
    for (std::size_t x = 0; x < n && report.zero_absorbing; ++x)
        if (product(zero, x) != zero || product(x, zero) != zero) {
            report.zero_absorbing = false;
            report.counterexamples.push_back({"absorbing zero",
                                              {m.carrier[x]},
                                              "0 * " + m.carrier[x] + " or " + m.carrier[x] +
                                                  " * 0 is not 0"});
        }

    // Abelian group on the nonzero part: closure, commutativity,
    // associativity, identity, inverses.
    report.units_group = true;
    auto fail_units = [&](std::vector<std::string> witness, std::string note) {
        if (report.units_group) {
            report.units_group = false;
            report.counterexamples.push_back({"units group", std::move(witness), std::move(note)});
        }
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == zero || y == zero) continue;
            if (product(x, y) == zero)
                fail_units({m.carrier[x], m.carrier[y]},
                           m.carrier[x] + " * " + m.carrier[y] + " = 0 (nonzero part not closed)");
            if (product(x, y) != product(y, x))
                fail_units({m.carrier[x], m.carrier[y]}, "multiplication is not commutative");
        }
    for (std::size_t x = 0; x < n && report.units_group; ++x)
        for (std::size_t y = 0; y < n && report.units_group; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (product(product(x, y), z) != product(x, product(y, z))) {
                    fail_units({m.carrier[x], m.carrier[y], m.carrier[z]},
                               "multiplication is not associative");
                    break;
                }
    std::optional<std::size_t> one;
    if (report.units_group) {
        for (std::size_t e = 0; e < n && !one; ++e) {
            if (e == zero) continue;
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x) {
                if (x == zero) continue;
                ok = product(e, x) == x && product(x, e) == x;
            }
            if (ok) one = e;
        }
        if (!one) fail_units({}, "no multiplicative identity among the nonzero elements");
    }
    if (report.units_group && one) {
        for (std::size_t x = 0; x < n; ++x) {
            if (x == zero) continue;
            bool has_inverse = false;
            for (std::size_t y = 0; y < n && !has_inverse; ++y)
                has_inverse = y != zero && product(x, y) == *one;
            if (!has_inverse) {
                fail_units({m.carrier[x]}, m.carrier[x] + " has no multiplicative inverse");
                break;
            }
        }
    }

    report.distributive = true;
    for (std::size_t a = 0; a < n && report.distributive; ++a)
        for (std::size_t b = 0; b < n && report.distributive; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::uint64_t lhs_left = 0, lhs_right = 0;
                for (std::size_t t = 0; t < n; ++t)
                    if (m.entry(b, c) >> t & 1u) {
                        lhs_left |= detail::onehot(product(a, t));
                        lhs_right |= detail::onehot(product(t, a));
                    }
                std::uint64_t rhs_left = m.entry(product(a, b), product(a, c));
                std::uint64_t rhs_right = m.entry(product(b, a), product(c, a));
                if ((lhs_left & ~rhs_left) || (lhs_right & ~rhs_right)) {
                    report.distributive = false;
                    report.counterexamples.push_back(
                        {"distributivity",
                         {m.carrier[a], m.carrier[b], m.carrier[c]},
                         m.carrier[a] + " * (" + m.carrier[b] + " + " + m.carrier[c] + ") = " +
                             m.render_mask(lhs_left) + " is not contained in " +
                             m.render_mask(rhs_left)});
                    break;
                }
            }

    return report;
}

/// A parsed table fixture: the additive hypermagma plus an optional
/// multiplication table.
struct HypermagmaFixture {
    FiniteHypermagma magma;
    std::optional<MulTable> mul;
};

/// Bundled fixtures: "sset" (the four-sign hyperaddition table) and
/// "sign_hyperfield" (the classical three-sign hyperfield with its
/// multiplication).
inline HypermagmaFixture fixture_hypermagma(std::string_view name) {
    if (name == "sset") {
        FiniteHypermagma m;
        for (Sign s : kAllSigns) m.carrier.emplace_back(sign_token(s));
        m.table.assign(16, 0);
        for (Sign s : kAllSigns)
            for (Sign t : kAllSigns) {
                std::uint64_t mask = 0;
                for (Sign r : sop(s, t).to_vector()) mask |= detail::onehot(sign_index(r));
                m.entry(sign_index(s), sign_index(t)) = mask;
            }
        return {std::move(m), std::nullopt};
    }
    if (name == "sign_hyperfield") {
        const Sign signs[3] = {Sign::Zero, Sign::Plus, Sign::Minus};
        FiniteHypermagma m;
        for (Sign s : signs) m.carrier.emplace_back(sign_token(s));
        m.table.assign(9, 0);
        MulTable mul(9, 0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                std::uint64_t mask = 0;
                for (Sign r : sop(signs[i], signs[j]).to_vector())
                    mask |= detail::onehot(sign_index(r)); // {0,+,-} indices coincide
                m.entry(i, j) = mask;
                mul[i * 3 + j] = sign_index(sign_mul_ext(signs[i], signs[j]));
            }
        return {std::move(m), std::move(mul)};
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

/// Error from the table file parser, carrying a 1-based line number.
class TableParseError : public std::runtime_error {
public:
    TableParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string> tokenize_table_line(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
    };
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            flush();
        } else if (ch == '{' || ch == '}' || ch == ',' || ch == '=' || ch == ':') {
            flush();
            tokens.emplace_back(1, ch);
        } else {
            current += ch;
        }
    }
    flush();
    return tokens;
}

} // namespace detail

/// Parses the text table format:
///
///   carrier: a b c
///   a + b = {x, y}
///   a * b = x          (optional multiplication lines)
///
/// Whitespace-insensitive; '#' starts a comment line.  Every ordered
/// pair must be defined exactly once per operation; the '+' table must
/// be total, and the '*' table, when present at all, must be total too.
inline HypermagmaFixture parse_hypermagma_table(std::string_view text) {
    FiniteHypermagma m;
    std::vector<bool> add_seen;
    std::vector<bool> mul_seen;
    MulTable mul;
    bool has_carrier = false;
    bool has_mul_lines = false;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto tokens = detail::tokenize_table_line(line);
        if (tokens.empty()) continue;

        if (tokens.size() >= 2 && tokens[0] == "carrier" && tokens[1] == ":") {
            if (has_carrier) throw TableParseError(lineno, "duplicate carrier line");
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                if (m.index_of(tokens[i]))
                    throw TableParseError(lineno, "duplicate carrier label '" + tokens[i] + "'");
                m.carrier.push_back(tokens[i]);
            }
            if (m.carrier.empty()) throw TableParseError(lineno, "empty carrier");
            if (m.carrier.size() > 64) throw TableParseError(lineno, "carrier larger than 64 elements");
            const std::size_t n = m.carrier.size();
            m.table.assign(n * n, 0);
            add_seen.assign(n * n, false);
            mul.assign(n * n, 0);
            mul_seen.assign(n * n, false);
            has_carrier = true;
            continue;
        }
        if (!has_carrier) throw TableParseError(lineno, "expected 'carrier:' line first");

        auto index_of = [&](const std::string& label) {
            auto idx = m.index_of(label);
            if (!idx) throw TableParseError(lineno, "unknown carrier label '" + label + "'");
            return *idx;
        };

        if (tokens.size() >= 4 && tokens[1] == "+" && tokens[3] == "=") {
            std::size_t i = index_of(tokens[0]);
            std::size_t j = index_of(tokens[2]);
            if (add_seen[i * m.size() + j])
                throw TableParseError(lineno, "duplicate entry for " + tokens[0] + " + " + tokens[2]);
            if (tokens.size() < 6 || tokens[4] != "{" || tokens.back() != "}")
                throw TableParseError(lineno, "expected a braced set, e.g. {x, y}");
            std::uint64_t mask = 0;
            bool expect_label = true;
            for (std::size_t t = 5; t + 1 < tokens.size(); ++t) {
                if (tokens[t] == ",") {
                    if (expect_label) throw TableParseError(lineno, "misplaced ',' in set");
                    expect_label = true;
                    continue;
                }
                if (!expect_label) throw TableParseError(lineno, "missing ',' between set elements");
                mask |= detail::onehot(index_of(tokens[t]));
                expect_label = false;
            }
            if (mask == 0) throw TableParseError(lineno, "empty set entry");
            if (expect_label) throw TableParseError(lineno, "trailing ',' in set");
            m.entry(i, j) = mask;
            add_seen[i * m.size() + j] = true;
            continue;
        }

        if (tokens.size() == 5 && tokens[1] == "*" && tokens[3] == "=") {
            std::size_t i = index_of(tokens[0]);
            std::size_t j = index_of(tokens[2]);
            if (mul_seen[i * m.size() + j])
                throw TableParseError(lineno, "duplicate entry for " + tokens[0] + " * " + tokens[2]);
            mul[i * m.size() + j] = index_of(tokens[4]);
            mul_seen[i * m.size() + j] = true;
            has_mul_lines = true;
            continue;
        }

        throw TableParseError(lineno, "unrecognized line");
    }

    if (!has_carrier) throw TableParseError(lineno ? lineno : 1, "missing 'carrier:' line");
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!add_seen[i * m.size() + j])
                throw TableParseError(lineno, "missing entry for " + m.carrier[i] + " + " + m.carrier[j]);

    HypermagmaFixture out{std::move(m), std::nullopt};
    if (has_mul_lines) {
        for (std::size_t i = 0; i < out.magma.size(); ++i)
            for (std::size_t j = 0; j < out.magma.size(); ++j)
                if (!mul_seen[i * out.magma.size() + j])
                    throw TableParseError(lineno, "incomplete '*' table: missing " +
                                                      out.magma.carrier[i] + " * " +
                                                      out.magma.carrier[j]);
        out.mul = std::move(mul);
    }
    return out;
}

} // namespace hypernum
