#include "pseries/abchar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pseries {

std::uint64_t AbelianStructure::order() const {
    std::uint64_t o = 1;
    for (auto d : orders) o *= d;
    return o;
}

std::uint64_t AbelianStructure::exponent() const {
    std::uint64_t e = 1;
    for (auto d : orders) e = std::lcm(e, d);
    return e;
}

AbelianStructure abelian_decompose(std::size_t size, std::size_t identity,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a + 1; b < size; ++b)
            if (mul(a, b) != mul(b, a)) throw NotAbelian("group is not abelian");

    AbelianStructure st;
    std::vector<std::uint8_t> in_s(size, 0);
    std::vector<std::size_t> s_elems{identity};
    in_s[identity] = 1;

    auto order_mod_s = [&](std::size_t x) {
        std::uint64_t k = 1;
        std::size_t y = x;
        while (!in_s[y]) {
            y = mul(y, x);
            ++k;
        }
        return k;
    };
    auto power = [&](std::size_t x, std::uint64_t k) {
        std::size_t y = identity;
        for (std::uint64_t i = 0; i < k; ++i) y = mul(y, x);
        return y;
    };

    while (s_elems.size() < size) {
        std::size_t best = identity;
        std::uint64_t best_order = 1;
        for (std::size_t x = 0; x < size; ++x) {
            if (in_s[x]) continue;
            const auto o = order_mod_s(x);
            if (o > best_order) {
                best_order = o;
                best = x;
            }
        }
        // lift so that the new generator meets S trivially
        std::size_t gen = size;
        for (std::size_t s : s_elems) {
            const std::size_t y = mul(best, s);
            if (power(y, best_order) == identity) {
                gen = y;
                break;
            }
        }
        if (gen == size) throw std::logic_error("no complement lift found in abelian decomposition");
        st.orders.push_back(best_order);
        st.generators.push_back(gen);
        std::vector<std::size_t> next;
        next.reserve(s_elems.size() * best_order);
        std::size_t g = identity;
        for (std::uint64_t k = 0; k < best_order; ++k) {
            for (std::size_t s : s_elems) next.push_back(mul(s, g));
            g = mul(g, gen);
        }
        s_elems = std::move(next);
        for (std::size_t x : s_elems) in_s[x] = 1;
    }

    // discrete logs by enumerating all exponent vectors
    const std::size_t r = st.orders.size();
    st.logs.assign(size, {});
    std::vector<std::uint64_t> e(r, 0);
    for (std::uint64_t count = 0; count < st.order(); ++count) {
        std::size_t x = identity;
        for (std::size_t i = 0; i < r; ++i) x = mul(x, power(st.generators[i], e[i]));
        if (!st.logs[x].empty() || (r == 0 && count > 0)) throw std::logic_error("discrete log is not unique");
        st.logs[x] = e;
        for (std::size_t i = r; i-- > 0;) {
            if (++e[i] < st.orders[i]) break;
            e[i] = 0;
        }
    }
    return st;
}

bool UnitChar::is_trivial() const {
    return std::all_of(exps.begin(), exps.end(), [](auto a) { return a == 0; });
}

std::string UnitChar::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(exps[i]);
    }
    return s + "]";
}

std::string LeviChar::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (j) s += "x";
        for (const auto& c : parts[j]) s += c.to_string();
    }
    return s;
}

UnitChar LocalUnits::character(std::uint64_t k) const {
    const auto& d = structure.orders;
    UnitChar c{std::vector<std::uint64_t>(d.size(), 0)};
    for (std::size_t i = d.size(); i-- > 0;) {
        c.exps[i] = k % d[i];
        k /= d[i];
    }
    return c;
}

std::vector<UnitChar> LocalUnits::characters() const {
    std::vector<UnitChar> out;
    for (std::uint64_t k = 0; k < char_count(); ++k) out.push_back(character(k));
    return out;
}

// ---------------------------------------------------------------------------

CharacterSystem::CharacterSystem(const RingSpec& ring, unsigned n)
    : ring_(ring), n_(n), conductor_(static_cast<unsigned>(ring.unit_exponent())) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    for (const auto& l : ring.locals()) {
        std::vector<std::uint64_t> codes;
        std::vector<std::int64_t> index(l.order(), -1);
        for (std::uint64_t a = 0; a < l.order(); ++a) {
            if (l.is_unit(a)) {
                index[a] = static_cast<std::int64_t>(codes.size());
                codes.push_back(a);
            }
        }
        auto st = abelian_decompose(codes.size(), static_cast<std::size_t>(index[1]), [&](std::size_t a, std::size_t b) {
            return static_cast<std::size_t>(index[l.mul(codes[a], codes[b])]);
        });
        locals_.push_back(LocalUnits{l, std::move(codes), std::move(index), std::move(st)});
    }
    const auto sn = all_permutations(n);
    std::size_t count = 1;
    for (std::size_t j = 0; j < locals_.size(); ++j) count *= sn.size();
    for (std::size_t w = 0; w < count; ++w) {
        PermWord word;
        word.perms.resize(locals_.size());
        std::size_t rest = w;
        for (std::size_t j = locals_.size(); j-- > 0;) {
            word.perms[j] = sn[rest % sn.size()];
            rest /= sn.size();
        }
        weyl_.push_back(std::move(word));
    }
}

std::uint64_t CharacterSystem::unit_exponent(std::size_t j, const UnitChar& chi, std::uint64_t code) const {
    const LocalUnits& lu = locals_.at(j);
    const std::int64_t pos = lu.index.at(code);
    if (pos < 0) throw std::invalid_argument("character evaluated on a non-unit");
    const auto& log = lu.structure.logs[static_cast<std::size_t>(pos)];
    const auto& d = lu.structure.orders;
    if (chi.exps.size() != d.size()) throw std::invalid_argument("character does not match the unit group");
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < d.size(); ++i) k = (k + chi.exps[i] * log[i] % d[i] * (conductor_ / d[i])) % conductor_;
    return k;
}

std::uint64_t CharacterSystem::levi_exponent(const LeviChar& chi, const std::vector<RingElem>& diag) const {
    if (chi.parts.size() != locals_.size() || diag.size() != n_) throw std::invalid_argument("character shape mismatch");
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < locals_.size(); ++j)
        for (unsigned i = 0; i < n_; ++i) k = (k + unit_exponent(j, chi.parts[j][i], ring_.component(diag[i], j))) % conductor_;
    return k;
}

CycloNum CharacterSystem::value(const LeviChar& chi, const std::vector<RingElem>& diag) const {
    return field().zeta_power(static_cast<long long>(levi_exponent(chi, diag)));
}

CycloNum CharacterSystem::value(const LeviChar& chi, const GroupTable& table, std::size_t l) const {
    const Mat& m = table.element(l);
    std::vector<RingElem> diag;
    for (unsigned i = 0; i < n_; ++i) diag.push_back(m.at(i, i));
    return value(chi, diag);
}

LeviChar CharacterSystem::trivial() const {
    LeviChar c;
    for (const auto& lu : locals_) c.parts.emplace_back(n_, lu.character(0));
    return c;
}

LeviChar CharacterSystem::power(const std::vector<UnitChar>& chi1) const {
    if (chi1.size() != locals_.size()) throw std::invalid_argument("need one unit character per local factor");
    LeviChar c;
    for (const auto& u : chi1) c.parts.emplace_back(n_, u);
    return c;
}

std::vector<LeviChar> all_levi_chars(const CharacterSystem& sys) {
    std::vector<std::vector<UnitChar>> local_chars;
    for (std::size_t j = 0; j < sys.ring().factor_count(); ++j) local_chars.push_back(sys.local_units(j).characters());
    // flattened slots: (factor, position), factor-major
    std::vector<std::size_t> radix;
    for (std::size_t j = 0; j < local_chars.size(); ++j)
        for (unsigned i = 0; i < sys.n(); ++i) radix.push_back(local_chars[j].size());
    std::vector<std::size_t> digit(radix.size(), 0);
    std::vector<LeviChar> out;
    while (true) {
        LeviChar c;
        std::size_t slot = 0;
        for (std::size_t j = 0; j < local_chars.size(); ++j) {
            c.parts.emplace_back();
            for (unsigned i = 0; i < sys.n(); ++i) c.parts[j].push_back(local_chars[j][digit[slot++]]);
        }
        out.push_back(std::move(c));
        std::size_t pos = radix.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < radix[pos]) break;
            digit[pos] = 0;
            if (pos == 0) return out;
        }
        if (radix.empty()) return out;
    }
}

LeviChar w_act(const PermWord& w, const LeviChar& chi) {
    if (w.perms.size() != chi.parts.size()) throw std::invalid_argument("Weyl element and character have different factor counts");
    LeviChar out = chi;
    for (std::size_t j = 0; j < chi.parts.size(); ++j) {
        const auto& p = w.perms[j];
        if (p.size() != chi.parts[j].size()) throw std::invalid_argument("Weyl element and character have different n");
        for (std::size_t c = 0; c < p.size(); ++c) out.parts[j][p[c]] = chi.parts[j][c];
    }
    return out;
}

std::vector<std::size_t> stabilizer(const CharacterSystem& sys, const LeviChar& chi) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < sys.weyl().size(); ++w)
        if (w_act(sys.weyl()[w], chi) == chi) out.push_back(w);
    return out;
}

LeviChar orbit_representative(const LeviChar& chi) {
    LeviChar out = chi;
    for (auto& part : out.parts) std::sort(part.begin(), part.end());
    return out;
}

std::size_t normalizing_word(const CharacterSystem& sys, const LeviChar& chi) {
    const LeviChar rep = orbit_representative(chi);
    for (std::size_t w = 0; w < sys.weyl().size(); ++w)
        if (w_act(sys.weyl()[w], chi) == rep) return w;
    throw std::logic_error("orbit representative not reached");
}

std::vector<LeviChar> orbit_representatives(const CharacterSystem& sys) {
    std::vector<LeviChar> reps;
    for (const auto& c : all_levi_chars(sys))
        if (orbit_representative(c) == c) reps.push_back(c);
    return reps;
}

std::vector<std::vector<unsigned>> stabilizer_shape(const LeviChar& chi) {
    std::vector<std::vector<unsigned>> shape;
    for (auto part : chi.parts) {
        std::sort(part.begin(), part.end());
        std::vector<unsigned> mult;
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (i == 0 || part[i] != part[i - 1]) mult.push_back(0);
            ++mult.back();
        }
        shape.push_back(std::move(mult));
    }
    return shape;
}

// ---------------------------------------------------------------------------
// Partitions

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

BigInt partition_count(unsigned n) { return multipartition_count(1, n); }

BigInt multipartition_count(unsigned k, unsigned n) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    // multiply by 1/(1 - x^i) k times for each part size i
    std::vector<BigInt> coeff(n + 1, 0);
    coeff[0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned rep = 0; rep < k; ++rep)
            for (unsigned m = i; m <= n; ++m) coeff[m] += coeff[m - i];
    return coeff[n];
}

BigInt sn_irrep_degree(const Partition& lambda) {
    unsigned n = 0;
    for (unsigned p : lambda) n += p;
    BigInt num = 1;
    for (unsigned i = 2; i <= n; ++i) num *= i;
    BigInt hooks = 1;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (unsigned c = 0; c < lambda[r]; ++c) {
            unsigned below = 0;
            for (std::size_t r2 = r + 1; r2 < lambda.size() && lambda[r2] > c; ++r2) ++below;
            hooks *= lambda[r] - c - 1 + below + 1;
        }
    return num / hooks;
}

BigInt irrep_count_of_stabilizer(const LeviChar& chi) {
    BigInt count = 1;
    for (const auto& mult : stabilizer_shape(chi))
        for (unsigned m : mult) count *= partition_count(m);
    return count;
}

std::vector<BigInt> stabilizer_irrep_degrees(const LeviChar& chi) {
    std::vector<BigInt> degrees{1};
    for (const auto& mult : stabilizer_shape(chi))
        for (unsigned m : mult) {
            std::vector<BigInt> next;
            for (const auto& lambda : partitions(m)) {
                const BigInt d = sn_irrep_degree(lambda);
                for (const auto& x : degrees) next.push_back(x * d);
            }
            degrees = std::move(next);
        }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace pseries
