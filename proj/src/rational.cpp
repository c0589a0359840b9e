#include "miortho/rational.hpp"

#include "miortho/errors.hpp"

#include <cctype>

namespace miortho {

GaussianRational GaussianRational::inverse() const {
    if (isZero())
        throw Error("GaussianRational: division by zero");
    Rational n = normSq();
    return {re / n, -im / n};
}

Rational rationalPow2(long e) {
    Rational r;
    if (e >= 0) {
        mpz_ui_pow_ui(r.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
    } else {
        mpz_ui_pow_ui(r.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
    }
    r.canonicalize();
    return r;
}

std::string rationalStr(const Rational& r) {
    return r.get_str();
}

namespace {

// Reads a signed rational "p" or "p/q" starting at pos; advances pos.
Rational readRational(std::string_view s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
        ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    std::string tok(s.substr(start, pos - start));
    if (tok.empty() || tok == "+" || tok == "-")
        throw Error("cannot parse rational from '" + std::string(s) + "'");
    Rational r;
    if (r.set_str(tok, 10) != 0)
        throw Error("cannot parse rational '" + tok + "'");
    r.canonicalize();
    if (r.get_den() == 0)
        throw Error("zero denominator in '" + tok + "'");
    return r;
}

} // namespace

Rational parseRational(std::string_view s) {
    size_t pos = 0;
    Rational r = readRational(s, pos);
    if (pos != s.size())
        throw Error("trailing characters in rational '" + std::string(s) + "'");
    return r;
}

GaussianRational GaussianRational::parse(std::string_view s) {
    if (s.empty())
        throw Error("empty number string");
    // strip spaces
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);

    // pure "i" forms
    auto isImagTail = [](std::string_view v, size_t pos) {
        return pos < v.size() &&
               (v.substr(pos) == "i" || v.substr(pos) == "*i");
    };
    if (t == "i" || t == "+i")
        return {Rational(0), Rational(1)};
    if (t == "-i")
        return {Rational(0), Rational(-1)};

    size_t pos = 0;
    Rational first = readRational(t, pos);
    if (pos == t.size())
        return {first, Rational(0)};
    if (isImagTail(t, pos))
        return {Rational(0), first};

    // "a+bi" / "a-bi" / "a+i" / "a-i"
    if (t[pos] != '+' && t[pos] != '-')
        throw Error("cannot parse Gaussian rational '" + t + "'");
    if (t.substr(pos) == "+i")
        return {first, Rational(1)};
    if (t.substr(pos) == "-i")
        return {first, Rational(-1)};
    Rational second = readRational(t, pos);
    if (!isImagTail(t, pos))
        throw Error("cannot parse Gaussian rational '" + t + "'");
    return {first, second};
}

std::string GaussianRational::str() const {
    if (im == 0)
        return re.get_str();
    Rational imAbs = abs(im);
    std::string imPart = imAbs.get_str() + "*i";
    if (re == 0)
        return (im < 0 ? "-" : "") + imPart;
    return re.get_str() + (im < 0 ? "-" : "+") + imPart;
}

} // namespace miortho
