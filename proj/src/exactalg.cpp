#include "mproj/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mproj {

BigInt binom(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw std::invalid_argument("binom: n must be nonnegative, got " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::constant(const BigInt& c)
{
    return monomial(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& c)
{
    return LaurentPoly(Terms{{exponent, c}});
}

BigInt LaurentPoly::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::coefficient_sum() const
{
    BigInt s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

LaurentPoly LaurentPoly::reflected() const
{
    Terms out;
    for (const auto& [e, c] : terms_)
        out.emplace(-e, c);
    return LaurentPoly(std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly::Terms out = a.terms_;
    for (const auto& [e, c] : b.terms_)
        out[e] += c;
    return LaurentPoly(std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly::Terms out = a.terms_;
    for (const auto& [e, c] : b.terms_)
        out[e] -= c;
    return LaurentPoly(std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly::Terms out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out[ea + eb] += ca * cb;
    return LaurentPoly(std::move(out));
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b)
{
    return a * b;
}

std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int e = it->first;
        BigInt c = it->second;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        first = false;
        if (e == 0) {
            out += c.str();
            continue;
        }
        if (c != 1)
            out += c.str() + "*";
        out += "q";
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

class LaurentParser {
public:
    explicit LaurentParser(std::string_view s) : s_(s) {}

    LaurentPoly parse()
    {
        LaurentPoly::Terms terms;
        skip_ws();
        if (at_end())
            fail("empty input");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [e, c] = term();
            terms[e] += sign * c;
            skip_ws();
        }
        return LaurentPoly(std::move(terms));
    }

private:
    std::pair<int, BigInt> term()
    {
        BigInt c = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            c = BigInt(digits());
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'q')
                    fail("expected 'q' after '*'");
            }
        }
        if (at_end() || peek() != 'q') {
            if (!have_coeff)
                fail("expected a coefficient or 'q'");
            return {0, c};
        }
        ++pos_;
        skip_ws();
        int e = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            bool neg = false;
            if (!at_end() && (peek() == '-' || peek() == '+')) {
                neg = peek() == '-';
                ++pos_;
            }
            const std::string d = digits();
            try {
                e = std::stoi(d);
            } catch (const std::out_of_range&) {
                fail("exponent out of range");
            }
            if (neg)
                e = -e;
        }
        return {e, c};
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("cannot parse Laurent polynomial '" + std::string(s_) +
                                    "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

void trim(TruncatedBiseries::XPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text)
{
    return LaurentParser(text).parse();
}

// ---------------------------------------------------------------------------
// TruncatedBiseries

TruncatedBiseries::TruncatedBiseries(unsigned tcap) : tcap_(tcap), rows_(tcap + 1) {}

TruncatedBiseries::TruncatedBiseries(unsigned tcap, std::vector<XPoly> rows)
    : tcap_(tcap), rows_(std::move(rows))
{
    rows_.resize(tcap_ + 1);
    for (auto& r : rows_)
        trim(r);
}

TruncatedBiseries TruncatedBiseries::one(unsigned tcap)
{
    return monomial(tcap, 0, 0);
}

TruncatedBiseries TruncatedBiseries::monomial(unsigned tcap, unsigned tdeg, unsigned xdeg,
                                              const BigInt& c)
{
    TruncatedBiseries s(tcap);
    if (tdeg <= tcap && c != 0) {
        s.rows_[tdeg].assign(xdeg + 1, BigInt(0));
        s.rows_[tdeg][xdeg] = c;
    }
    return s;
}

BigInt TruncatedBiseries::coeff(unsigned tdeg, unsigned xdeg) const
{
    if (tdeg > tcap_)
        return 0;
    const XPoly& r = rows_[tdeg];
    return xdeg < r.size() ? r[xdeg] : BigInt(0);
}

namespace {

void require_same_cap(const TruncatedBiseries& a, const TruncatedBiseries& b, const char* op)
{
    if (a.tcap() != b.tcap())
        throw std::invalid_argument(std::string(op) + ": truncation caps differ (" +
                                    std::to_string(a.tcap()) + " vs " +
                                    std::to_string(b.tcap()) + ")");
}

TruncatedBiseries combine(const TruncatedBiseries& a, const TruncatedBiseries& b, int sign)
{
    std::vector<TruncatedBiseries::XPoly> rows(a.tcap() + 1);
    for (unsigned i = 0; i <= a.tcap(); ++i) {
        const auto& ra = a.row(i);
        const auto& rb = b.row(i);
        auto& r = rows[i];
        r.assign(std::max(ra.size(), rb.size()), BigInt(0));
        for (std::size_t j = 0; j < ra.size(); ++j)
            r[j] += ra[j];
        for (std::size_t j = 0; j < rb.size(); ++j)
            r[j] += sign * rb[j];
    }
    return TruncatedBiseries(a.tcap(), std::move(rows));
}

}  // namespace

TruncatedBiseries operator+(const TruncatedBiseries& a, const TruncatedBiseries& b)
{
    require_same_cap(a, b, "series add");
    return combine(a, b, 1);
}

TruncatedBiseries operator-(const TruncatedBiseries& a, const TruncatedBiseries& b)
{
    require_same_cap(a, b, "series subtract");
    return combine(a, b, -1);
}

TruncatedBiseries series_mul(const TruncatedBiseries& a, const TruncatedBiseries& b)
{
    require_same_cap(a, b, "series_mul");
    const unsigned cap = a.tcap();
    std::vector<TruncatedBiseries::XPoly> rows(cap + 1);
    for (unsigned i = 0; i <= cap; ++i) {
        const auto& ra = a.row(i);
        if (ra.empty())
            continue;
        for (unsigned k = 0; i + k <= cap; ++k) {
            const auto& rb = b.row(k);
            if (rb.empty())
                continue;
            auto& out = rows[i + k];
            if (out.size() < ra.size() + rb.size() - 1)
                out.resize(ra.size() + rb.size() - 1, BigInt(0));
            for (std::size_t p = 0; p < ra.size(); ++p) {
                if (ra[p] == 0)
                    continue;
                for (std::size_t q = 0; q < rb.size(); ++q)
                    if (rb[q] != 0)
                        out[p + q] += ra[p] * rb[q];
            }
        }
    }
    return TruncatedBiseries(cap, std::move(rows));
}

TruncatedBiseries series_geometric(const TruncatedBiseries& u)
{
    if (!u.row(0).empty())
        throw std::domain_error(
            "series_geometric: argument has a nonzero t^0 term, 1/(1-u) is not a power series in t");
    // u^k only contributes from t^k upward, so k <= tcap terms suffice.
    TruncatedBiseries sum = TruncatedBiseries::one(u.tcap());
    TruncatedBiseries power = sum;
    for (unsigned k = 1; k <= u.tcap(); ++k) {
        power = series_mul(power, u);
        sum = sum + power;
    }
    return sum;
}

TruncatedBiseries series_pow(const TruncatedBiseries& u, unsigned k)
{
    TruncatedBiseries result = TruncatedBiseries::one(u.tcap());
    TruncatedBiseries base = u;
    while (k != 0) {
        if (k & 1u)
            result = series_mul(result, base);
        k >>= 1;
        if (k != 0)
            base = series_mul(base, base);
    }
    return result;
}

}  // namespace mproj
