#include "mproj/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>

namespace mproj {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw std::invalid_argument("Partition: needs at least one part");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    if (parts_.back() == 0)
        throw std::invalid_argument("Partition: parts must be positive");
    for (unsigned p : parts_)
        n_ += p;
}

std::string to_string(const Partition& p)
{
    std::string out;
    for (unsigned part : p.parts()) {
        if (!out.empty())
            out += ",";
        out += std::to_string(part);
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    std::vector<unsigned> parts;
    std::size_t i = 0;
    bool expect_token = true;  // set after a comma
    bool saw_comma = false;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == ',') {
            if (expect_token)
                throw ParseError("empty part in partition '" + std::string(text) + "'");
            expect_token = true;
            saw_comma = true;
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ',' &&
               !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        const std::string_view tok = text.substr(i, j - i);
        unsigned long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() ||
            v > std::numeric_limits<unsigned>::max() / 2)
            throw ParseError("invalid part '" + std::string(tok) +
                             "': parts must be positive integers");
        if (v == 0)
            throw ParseError("invalid part '" + std::string(tok) + "': parts must be positive");
        parts.push_back(static_cast<unsigned>(v));
        expect_token = false;
        i = j;
    }
    if (parts.empty())
        throw ParseError("empty partition");
    if (saw_comma && expect_token)
        throw ParseError("trailing comma in partition '" + std::string(text) + "'");
    return Partition(std::move(parts));
}

Character cohomology_character(const Partition& p)
{
    return tensor_of_irreps(p.parts());
}

PoincarePolynomial poincare_of_multiprojective(const Partition& p)
{
    std::vector<BigInt> acc{BigInt(1)};
    for (unsigned part : p.parts()) {
        const auto factor = poincare_genus_zero(part).betti();
        std::vector<BigInt> next(acc.size() + factor.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < factor.size(); ++j)
                next[i + j] += acc[i] * factor[j];
        acc = std::move(next);
    }
    return PoincarePolynomial(std::move(acc));
}

std::string to_string(Verdict v)
{
    return v == Verdict::ISOMORPHIC ? "ISOMORPHIC" : "NON_ISOMORPHIC";
}

std::string to_string(VerdictReason r)
{
    switch (r) {
    case VerdictReason::DIMENSION_MISMATCH:
        return "DIMENSION_MISMATCH";
    case VerdictReason::SAME_PARTITION:
        return "SAME_PARTITION";
    case VerdictReason::DISTINCT_CHARACTERS:
        return "DISTINCT_CHARACTERS";
    }
    return "?";
}

ClassificationVerdict classify(const Partition& p1, const Partition& p2)
{
    if (p1.n() != p2.n())
        return {Verdict::NON_ISOMORPHIC, VerdictReason::DIMENSION_MISMATCH, p1, p2, std::nullopt};

    VerdictEvidence ev{cohomology_character(p1), cohomology_character(p2), {}, {}};
    ev.factorization1 = factor_tensor_of_irreps(ev.character1);
    ev.factorization2 = factor_tensor_of_irreps(ev.character2);
    if (p1 == p2)
        return {Verdict::ISOMORPHIC, VerdictReason::SAME_PARTITION, p1, p2, std::move(ev)};
    return {Verdict::NON_ISOMORPHIC, VerdictReason::DISTINCT_CHARACTERS, p1, p2, std::move(ev)};
}

bool evidence_is_consistent(const ClassificationVerdict& v)
{
    if (v.reason == VerdictReason::DIMENSION_MISMATCH)
        return v.verdict == Verdict::NON_ISOMORPHIC && v.partition1.n() != v.partition2.n();
    if (!v.evidence)
        return false;
    const auto& ev = *v.evidence;
    if (ev.factorization1 != IrrepMultiset(v.partition1.parts()) ||
        ev.factorization2 != IrrepMultiset(v.partition2.parts()))
        return false;
    if (ev.character1 != cohomology_character(v.partition1) ||
        ev.character2 != cohomology_character(v.partition2))
        return false;
    const bool same = ev.character1 == ev.character2;
    return v.verdict == (same ? Verdict::ISOMORPHIC : Verdict::NON_ISOMORPHIC);
}

// ---------------------------------------------------------------------------
// ProjPoint

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw std::invalid_argument("ProjPoint: no coordinates");
    if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; }))
        throw std::invalid_argument("ProjPoint: all coordinates are zero");
}

ProjPoint ProjPoint::normalized() const
{
    const auto lead = *std::find_if(coords_.begin(), coords_.end(),
                                    [](const Rational& c) { return c != 0; });
    std::vector<Rational> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_)
        out.push_back(c / lead);
    return ProjPoint(std::move(out));
}

bool operator==(const ProjPoint& a, const ProjPoint& b)
{
    if (a.size() != b.size())
        return false;
    return a.normalized().coords_ == b.normalized().coords_;
}

std::string to_string(const ProjPoint& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += ":";
        out += p.coords()[i].str();
    }
    return out + "]";
}

ProjPoint sym2_p1_map(const ProjPoint& z, const ProjPoint& w)
{
    if (z.size() != 2 || w.size() != 2)
        throw std::invalid_argument("sym2_p1_map: both points must lie in P^1");
    const auto zc = z.coords();
    const auto wc = w.coords();
    return ProjPoint({zc[0] * wc[0], zc[1] * wc[1], zc[0] * wc[1] + zc[1] * wc[0]});
}

}  // namespace mproj
