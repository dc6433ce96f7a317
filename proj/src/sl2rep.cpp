#include "mproj/sl2rep.hpp"

#include <charconv>
#include <limits>
#include <optional>

namespace mproj {

Character::Character(LaurentPoly poly) : poly_(std::move(poly))
{
    for (const auto& [e, c] : poly_.terms()) {
        if (c < 0)
            throw CharacterError("character has a negative coefficient at q^" +
                                 std::to_string(e) + ": " + to_string(poly_));
        if (poly_.coeff(-e) != c)
            throw CharacterError("character is not palindromic: " + to_string(poly_));
    }
}

std::string to_string(const Character& c)
{
    return to_string(c.poly());
}

// ---------------------------------------------------------------------------
// IrrepMultiset

IrrepMultiset::IrrepMultiset(Counts counts) : counts_(std::move(counts))
{
    std::erase_if(counts_, [](const auto& kv) { return kv.second == 0; });
}

IrrepMultiset::IrrepMultiset(std::span<const unsigned> labels)
{
    for (unsigned l : labels)
        ++counts_[l];
}

std::vector<unsigned> IrrepMultiset::labels() const
{
    std::vector<unsigned> out;
    for (const auto& [label, mult] : counts_)
        out.insert(out.end(), mult, label);
    return out;
}

unsigned IrrepMultiset::multiplicity(unsigned label) const
{
    auto it = counts_.find(label);
    return it == counts_.end() ? 0 : it->second;
}

std::size_t IrrepMultiset::size() const
{
    std::size_t s = 0;
    for (const auto& kv : counts_)
        s += kv.second;
    return s;
}

unsigned IrrepMultiset::label_sum() const
{
    unsigned s = 0;
    for (const auto& [label, mult] : counts_)
        s += label * mult;
    return s;
}

std::string to_string(const IrrepMultiset& m)
{
    std::string out;
    for (const auto& [label, mult] : m.counts()) {
        if (!out.empty())
            out += ",";
        out += std::to_string(label);
        if (mult > 1)
            out += "^" + std::to_string(mult);
    }
    return out;
}

namespace {

unsigned parse_unsigned(std::string_view tok, std::string_view whole)
{
    while (!tok.empty() && tok.front() == ' ')
        tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ')
        tok.remove_suffix(1);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad token '" + std::string(tok) + "' in irrep multiset '" +
                                    std::string(whole) + "'");
    return v;
}

}  // namespace

IrrepMultiset parse_irrep_multiset(std::string_view text)
{
    IrrepMultiset::Counts counts;
    if (text.empty())
        return IrrepMultiset();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        const std::size_t caret = tok.find('^');
        const unsigned label = parse_unsigned(tok.substr(0, caret), text);
        unsigned mult = 1;
        if (caret != std::string_view::npos) {
            mult = parse_unsigned(tok.substr(caret + 1), text);
            if (mult == 0)
                throw std::invalid_argument("zero multiplicity in irrep multiset '" +
                                            std::string(text) + "'");
        }
        counts[label] += mult;
        pos = end + 1;
    }
    return IrrepMultiset(std::move(counts));
}

// ---------------------------------------------------------------------------
// Partitions

namespace {

bool partitions_rec(unsigned remaining, unsigned max_part, unsigned parts_left,
                    std::vector<unsigned>& cur,
                    const std::function<bool(std::span<const unsigned>)>& visit)
{
    if (parts_left == 0)
        return remaining == 0 ? visit(cur) : true;
    // Need parts_left parts, each in [1, max_part].
    if (remaining < parts_left || remaining > parts_left * max_part)
        return true;
    const unsigned hi = std::min(max_part, remaining - (parts_left - 1));
    for (unsigned p = hi; p >= 1; --p) {
        cur.push_back(p);
        const bool go_on = partitions_rec(remaining - p, p, parts_left - 1, cur, visit);
        cur.pop_back();
        if (!go_on)
            return false;
    }
    return true;
}

void all_partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                        std::vector<std::vector<unsigned>>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        all_partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<unsigned>> integer_partitions(unsigned n)
{
    std::vector<std::vector<unsigned>> out;
    if (n == 0)
        return out;
    std::vector<unsigned> cur;
    all_partitions_rec(n, n, cur, out);
    return out;
}

void for_each_partition(unsigned n, unsigned parts,
                        const std::function<bool(std::span<const unsigned>)>& visit)
{
    if (parts == 0)
        return;
    std::vector<unsigned> cur;
    cur.reserve(parts);
    partitions_rec(n, n, parts, cur, visit);
}

// ---------------------------------------------------------------------------
// Characters

Character irrep_character(unsigned n)
{
    LaurentPoly::Terms t;
    const int top = static_cast<int>(n);
    for (int w = top; w >= -top; w -= 2)
        t.emplace(w, 1);
    return Character(LaurentPoly(std::move(t)));
}

Character tensor_character(std::span<const Character> factors)
{
    if (factors.empty())
        throw std::invalid_argument("tensor_character: empty list of factors");
    LaurentPoly p = factors.front().poly();
    for (const Character& f : factors.subspan(1))
        p = laurent_mul(p, f.poly());
    return Character(std::move(p));
}

Character tensor_of_irreps(std::span<const unsigned> labels)
{
    std::vector<Character> chars;
    chars.reserve(labels.size());
    for (unsigned l : labels)
        chars.push_back(irrep_character(l));
    return tensor_character(chars);
}

IrrepMultiset clebsch_gordan_decompose(const Character& c)
{
    IrrepMultiset::Counts counts;
    if (c.poly().is_zero())
        return IrrepMultiset();
    for (int k = c.top_weight(); k >= 0; --k) {
        const BigInt m = c.multiplicity(k) - c.multiplicity(k + 2);
        if (m < 0)
            throw CharacterError("not a module character: multiplicity of weight " +
                                 std::to_string(k) + " drops below that of weight " +
                                 std::to_string(k + 2) + " in " + to_string(c));
        if (m > 0) {
            if (m > std::numeric_limits<unsigned>::max())
                throw std::overflow_error("clebsch_gordan_decompose: multiplicity too large");
            counts[static_cast<unsigned>(k)] = m.convert_to<unsigned>();
        }
    }
    return IrrepMultiset(std::move(counts));
}

IrrepMultiset factor_tensor_of_irreps(const Character& c)
{
    const auto fail = [&c](const std::string& why) -> CharacterError {
        return CharacterError("not a tensor of nontrivial irreducibles: " + why + " (" +
                              to_string(c) + ")");
    };
    if (c.poly().is_zero())
        throw fail("zero character");
    const int top = c.top_weight();
    if (top <= 0)
        throw fail("no positive weight");
    if (c.multiplicity(top) != 1)
        throw fail("highest weight is not simple");

    // In a product of r nontrivial irreducibles the weight top-2 occurs
    // exactly r times, which pins down the number of factors.
    const BigInt r_big = c.multiplicity(top - 2);
    if (r_big < 1 || r_big > top)
        throw fail("weight below the top has the wrong multiplicity");
    const auto parts = r_big.convert_to<unsigned>();
    const BigInt dim = c.dimension();

    std::optional<IrrepMultiset> found;
    for_each_partition(static_cast<unsigned>(top), parts, [&](std::span<const unsigned> p) {
        BigInt prod = 1;
        for (unsigned n : p)
            prod *= n + 1;
        if (prod != dim)
            return true;
        if (tensor_of_irreps(p) != c)
            return true;
        found = IrrepMultiset(p);
        return false;
    });
    if (!found)
        throw fail("no partition of the top weight reproduces the character");
    return *found;
}

}  // namespace mproj
