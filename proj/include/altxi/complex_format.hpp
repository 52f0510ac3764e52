#ifndef ALTXI_COMPLEX_FORMAT_HPP
#define ALTXI_COMPLEX_FORMAT_HPP

// Shell-safe complex grammar and lossless record serialization.
// Grammar: <real>, <real>+<real>i, <real>-<real>i, with a bare `i` in the
// imaginary slot meaning 1i. No whitespace. Reals are printed with 17
// significant digits so format/parse round trips are exact for doubles.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "altxi/common.hpp"

namespace altxi {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double parse_real_strict(const std::string& text) {
    if (text.empty()) throw ParseError("empty number");
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + text.size())
        throw ParseError("malformed real number: '" + text + "'");
    return v;
}

// imaginary magnitude from the slot between the sign and the trailing 'i';
// empty means 1.
inline double parse_imag_slot(const std::string& text) {
    if (text.empty()) return 1.0;
    return parse_real_strict(text);
}

}  // namespace detail

inline Complex parse_complex(const std::string& text) {
    if (text.empty()) throw ParseError("empty complex literal");
    for (char ch : text)
        if (std::isspace(static_cast<unsigned char>(ch)))
            throw ParseError("whitespace not allowed in complex literal");
    if (text.back() == 'i') {
        std::string body = text.substr(0, text.size() - 1);
        // find the sign separating real and imaginary parts, skipping a
        // leading sign and exponent signs
        size_t split = std::string::npos;
        for (size_t i = 1; i < body.size(); ++i) {
            char ch = body[i];
            if ((ch == '+' || ch == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;  // keep the last one: 1e-3+2e-4i splits at the middle sign
            }
        }
        if (split == std::string::npos) {
            // pure imaginary: i, +i, -i, <real>i
            if (body.empty() || body == "+") return Complex(0.0, 1.0);
            if (body == "-") return Complex(0.0, -1.0);
            return Complex(0.0, detail::parse_real_strict(body));
        }
        double re = detail::parse_real_strict(body.substr(0, split));
        double sign = body[split] == '-' ? -1.0 : 1.0;
        double im = detail::parse_imag_slot(body.substr(split + 1));
        return Complex(re, sign * im);
    }
    return Complex(detail::parse_real_strict(text), 0.0);
}

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_real(z.real());
    if (z.imag() < 0.0) return format_real(z.real()) + "-" + format_real(-z.imag()) + "i";
    return format_real(z.real()) + "+" + format_real(z.imag()) + "i";
}

// One evaluation, serialized as a flat JSON object or CSV row.
struct OutputRecord {
    std::string function;
    Complex s{0.0, 0.0};
    Complex value{0.0, 0.0};
    std::string method;
    double est_error = 0.0;
    int terms_used = 0;
};

inline std::string csv_header() {
    return "function,s_re,s_im,value_re,value_im,method,est_error,terms_used";
}

inline std::string to_csv(const OutputRecord& r) {
    return r.function + "," + format_real(r.s.real()) + "," + format_real(r.s.imag()) +
           "," + format_real(r.value.real()) + "," + format_real(r.value.imag()) + "," +
           r.method + "," + format_real(r.est_error) + "," + std::to_string(r.terms_used);
}

inline std::string to_json(const OutputRecord& r) {
    return std::string("{\"function\":\"") + r.function + "\",\"s_re\":" +
           format_real(r.s.real()) + ",\"s_im\":" + format_real(r.s.imag()) +
           ",\"value_re\":" + format_real(r.value.real()) + ",\"value_im\":" +
           format_real(r.value.imag()) + ",\"method\":\"" + r.method +
           "\",\"est_error\":" + format_real(r.est_error) +
           ",\"terms_used\":" + std::to_string(r.terms_used) + "}";
}

}  // namespace altxi

#endif
