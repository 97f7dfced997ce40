#include "text.hpp"

#include "skewtilt/errors.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace skewtilt::detail {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::map<std::string, long long> parse_linear(std::string_view text, std::string_view allowed_csv) {
    std::set<std::string> allowed;
    {
        std::string cur;
        for (char ch : allowed_csv) {
            if (ch == ',') { allowed.insert(cur); cur.clear(); }
            else cur.push_back(ch);
        }
        if (!cur.empty()) allowed.insert(cur);
    }
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty expression");
    std::map<std::string, long long> out;
    if (s == "0") return out;

    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        long long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
        }
        first = false;
        long long coef = 1;
        bool have_digits = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos - start > 12) throw ParseError("coefficient too large");
            coef = std::stoll(s.substr(start, pos - start));
            have_digits = true;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        size_t start = pos;
        while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string sym = s.substr(start, pos - start);
        if (sym.empty()) {
            if (have_digits && coef == 0) continue;
            throw ParseError("missing symbol in '" + std::string(text) + "'");
        }
        if (!allowed.count(sym)) throw ParseError("unknown symbol '" + sym + "'");
        out[sym] += sign * coef;
    }
    return out;
}

std::string format_linear(const std::map<std::string, long long>& terms,
                          std::initializer_list<std::string_view> order,
                          bool spaced) {
    std::ostringstream os;
    bool first = true;
    for (auto sym : order) {
        auto it = terms.find(std::string(sym));
        if (it == terms.end() || it->second == 0) continue;
        long long v = it->second;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (spaced ? (v < 0 ? " - " : " + ") : (v < 0 ? "-" : "+"));
        }
        long long a = v < 0 ? -v : v;
        if (a != 1) os << a << "*";
        os << sym;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace skewtilt::detail
