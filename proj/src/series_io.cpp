#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "genkron/kernels.hpp"
#include "genkron/series.hpp"

namespace genkron {

void write_terms(std::ostream& out, const BiSeries& s)
{
    for (int d = 0; d < s.trunc(); ++d) {
        for (int a = d; a >= 0; --a) {
            const Rational& c = s.coeff(a, d - a);
            if (sgn(c) != 0) {
                out << a << ' ' << (d - a) << ' ' << to_string(c) << '\n';
            }
        }
    }
}

void write_terms(std::ostream& out, const UniSeries& s)
{
    for (int i = 0; i < s.trunc(); ++i) {
        if (sgn(s[i]) != 0) {
            out << i << ' ' << to_string(s[i]) << '\n';
        }
    }
}

namespace {

bool next_fields(std::istream& in, std::istringstream& fields, std::string& line)
{
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        fields.clear();
        fields.str(line);
        return true;
    }
    return false;
}

[[noreturn]] void malformed(const std::string& line)
{
    throw std::invalid_argument("malformed series line '" + line + "'");
}

} // namespace

BiSeries read_bi_terms(std::istream& in, int trunc)
{
    std::vector<Rational> coeffs(kernels::tri_size(trunc));
    std::istringstream fields;
    std::string line;
    while (next_fields(in, fields, line)) {
        int a = -1;
        int b = -1;
        std::string value;
        std::string extra;
        if (!(fields >> a >> b >> value) || (fields >> extra)) {
            malformed(line);
        }
        if (a < 0 || b < 0 || a + b >= trunc) {
            throw std::out_of_range("series term (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") outside truncation " + std::to_string(trunc));
        }
        coeffs[kernels::tri_index(a, b)] = parse_rational(value);
    }
    return BiSeries::from_coeffs(trunc, std::move(coeffs));
}

UniSeries read_uni_terms(std::istream& in, int trunc)
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(trunc));
    std::istringstream fields;
    std::string line;
    while (next_fields(in, fields, line)) {
        int i = -1;
        std::string value;
        std::string extra;
        if (!(fields >> i >> value) || (fields >> extra)) {
            malformed(line);
        }
        if (i < 0 || i >= trunc) {
            throw std::out_of_range("series term " + std::to_string(i) + " outside truncation " + std::to_string(trunc));
        }
        coeffs[static_cast<std::size_t>(i)] = parse_rational(value);
    }
    return UniSeries(trunc, std::move(coeffs));
}

} // namespace genkron
