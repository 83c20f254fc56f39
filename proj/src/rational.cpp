#include "crown/rational.hpp"

#include <cctype>

namespace crown {

Rat parseRat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt p(text.substr(0, slash));
        BigInt q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rat(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rat(BigInt(text));
    std::string intPart = text.substr(0, dot);
    std::string fracPart = text.substr(dot + 1);
    bool neg = !intPart.empty() && intPart[0] == '-';
    if (intPart == "-" || intPart.empty()) intPart = "0";
    for (char c : fracPart)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad rational literal '" + text + "'");
    BigInt scale = 1;
    for (size_t i = 0; i < fracPart.size(); ++i) scale *= 10;
    BigInt num = BigInt(intPart) * scale;
    BigInt frac = fracPart.empty() ? BigInt(0) : BigInt(fracPart);
    num += neg ? -frac : frac;
    return Rat(num, scale);
}

std::string formatRat(const Rat& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
}

std::string formatRatDecimal(const Rat& r) {
    BigInt den = r.denominator();
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1)
        throw std::invalid_argument("rational " + formatRat(r) + " has no finite decimal form");
    int digits = twos > fives ? twos : fives;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt num = r.numerator() * scale / r.denominator();
    bool neg = num < 0;
    if (neg) num = -num;
    std::string s = num.str();
    if (digits > 0) {
        while (static_cast<int>(s.size()) <= digits) s = "0" + s;
        s.insert(s.size() - digits, ".");
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return neg ? "-" + s : s;
}

}  // namespace crown
