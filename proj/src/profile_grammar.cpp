#include "lagconf/profile_grammar.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagconf/hofer.hpp"

namespace lagconf {

namespace {

const Rational kHalf(1, 2);

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) out.push_back(c);
    return out;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<Rational> parse_list(const std::string& s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string("parse_profile: empty ") + what);
    std::vector<Rational> out;
    for (const std::string& tok : split_top_level(s, ',')) {
        if (tok.empty())
            throw std::invalid_argument(std::string("parse_profile: empty entry in ") + what);
        out.push_back(parse_rational(tok));
    }
    return out;
}

PiecewisePoly parse_term(const std::string& term) {
    const auto colon = term.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("parse_profile: term '" + term + "' lacks a kind prefix");
    const std::string kind = term.substr(0, colon);
    const std::string body = term.substr(colon + 1);
    if (kind == "const") {
        return PiecewisePoly::constant(parse_rational(body), -kHalf, kHalf);
    }
    if (kind == "poly") {
        const auto at = body.find("]@[");
        if (body.size() < 4 || body.front() != '[' || body.back() != ']' ||
            at == std::string::npos)
            throw std::invalid_argument(
                "parse_profile: poly term must look like poly:[c0,...]@[a,b]");
        const auto coeffs = parse_list(body.substr(1, at - 1), "coefficient list");
        const auto range = parse_list(body.substr(at + 3, body.size() - at - 4), "interval");
        if (range.size() != 2)
            throw std::invalid_argument("parse_profile: poly interval needs two endpoints");
        return PiecewisePoly::from_poly(coeffs, range[0], range[1], -kHalf, kHalf);
    }
    if (kind == "bump") {
        const auto args = parse_list(body, "bump arguments");
        if (args.size() != 3)
            throw std::invalid_argument("parse_profile: bump needs center,width,height");
        return bump_profile(args[0], args[1], args[2], -kHalf, kHalf);
    }
    if (kind == "indicator-smooth") {
        const auto args = parse_list(body, "indicator-smooth arguments");
        if (args.size() != 2)
            throw std::invalid_argument("parse_profile: indicator-smooth needs r,delta");
        return h_r_delta(args[0], args[1]);
    }
    throw std::invalid_argument("parse_profile: unknown term kind '" + kind + "'");
}

}  // namespace

PiecewisePoly parse_profile(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("parse_profile: empty expression");
    PiecewisePoly sum = PiecewisePoly::zero(-kHalf, kHalf);
    for (const std::string& term : split_top_level(s, '+')) {
        if (term.empty()) throw std::invalid_argument("parse_profile: empty term");
        sum = sum.plus(parse_term(term));
    }
    return sum;
}

}  // namespace lagconf
