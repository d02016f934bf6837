#include "lsa/format.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace lsa {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& s, std::size_t line, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw FileError(line, std::string("bad ") + what + ": '" + s + "'");
    }
}

} // namespace

LieSuperAlgebra parse_algebra(const std::string& text, std::string name, bool run_validation) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    long even = -1, odd = -1, characteristic = 0;
    bool saw_magic = false, saw_char = false;
    // (i, j) -> (terms k->coeff text, line)
    std::map<std::pair<long, long>, std::pair<std::map<long, std::string>, std::size_t>> entries;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (std::size_t h = line.find('#'); h != std::string::npos)
            line.resize(h);
        line = trim(line);
        if (line.empty()) continue;

        if (!saw_magic) {
            if (line != "lsa 1")
                throw FileError(lineno, "expected header 'lsa 1'");
            saw_magic = true;
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "even" || key == "odd" || key == "char") {
            std::string val;
            ls >> val;
            std::string rest;
            if (ls >> rest) throw FileError(lineno, "trailing tokens after '" + key + "'");
            long v = parse_long(val, lineno, key.c_str());
            if (key == "char") {
                saw_char = true;
                if (v < 0) throw FileError(lineno, "negative characteristic");
                characteristic = v;
            } else {
                if (v < 0) throw FileError(lineno, "negative dimension");
                (key == "even" ? even : odd) = v;
            }
            continue;
        }
        if (key.empty() || key[0] != '[')
            throw FileError(lineno, "expected 'even', 'odd', 'char' or a bracket entry");
        if (even < 0 || odd < 0)
            throw FileError(lineno, "bracket entry before 'even'/'odd' declarations");

        // [i,j] = k:coef [k:coef ...]
        std::size_t close = line.find(']');
        std::size_t eq = line.find('=');
        std::size_t comma = line.find(',');
        if (close == std::string::npos || eq == std::string::npos || comma == std::string::npos ||
            comma > close || eq < close)
            throw FileError(lineno, "malformed bracket entry");
        long i = parse_long(trim(line.substr(1, comma - 1)), lineno, "index");
        long j = parse_long(trim(line.substr(comma + 1, close - comma - 1)), lineno, "index");
        long t = even + odd;
        if (i < 1 || i > t || j < 1 || j > t)
            throw FileError(lineno, "basis index out of range");

        auto& [terms, first_line] = entries[{i, j}];
        if (terms.empty()) first_line = lineno;
        std::istringstream ts(line.substr(eq + 1));
        std::string tok;
        bool any = false;
        while (ts >> tok) {
            std::size_t colon = tok.find(':');
            if (colon == std::string::npos)
                throw FileError(lineno, "expected 'index:coefficient', got '" + tok + "'");
            long k = parse_long(tok.substr(0, colon), lineno, "index");
            if (k < 1 || k > t)
                throw FileError(lineno, "target index out of range");
            if (terms.count(k))
                throw FileError(lineno, "duplicate entry for [" + std::to_string(i) + "," +
                                            std::to_string(j) + "] -> " + std::to_string(k));
            std::string coef = tok.substr(colon + 1);
            try {
                Scalar::parse(coef, 0);
            } catch (const std::exception& e) {
                throw FileError(lineno, e.what());
            }
            terms[k] = coef;
            any = true;
        }
        if (!any) throw FileError(lineno, "bracket entry with no terms");
    }
    if (!saw_magic) throw FileError(0, "empty file");
    if (even < 0 || odd < 0) throw FileError(0, "missing 'even'/'odd' declarations");
    if (characteristic == 2 || characteristic == 3)
        throw FileError(0, "unsupported characteristic (2 or 3)");
    (void)saw_char;

    unsigned ch = (unsigned)characteristic;
    Scalar::check_characteristic(ch);
    LieSuperAlgebra l(std::move(name), {even, odd}, ch);
    auto parity = [&](long i) { return i <= even ? 0 : 1; };

    for (const auto& [ij, rec] : entries) {
        auto [i, j] = ij;
        const auto& [terms, line] = rec;
        for (const auto& [k, coef] : terms) {
            Scalar v = Scalar::parse(coef, ch);
            if (!l.c(i - 1, j - 1, k - 1).is_zero())
                throw FileError(line, "duplicate structure constant [" + std::to_string(i) +
                                          "," + std::to_string(j) + "] -> " + std::to_string(k));
            l.set_bracket(i - 1, j - 1, k - 1, v);
            if (i != j) {
                // Complete by graded skew-symmetry; contradictions surface in
                // validation below if the mirror was also given explicitly.
                Scalar mirror = (parity(i) * parity(j)) % 2 == 0 ? -v : v;
                auto it = entries.find({j, i});
                bool mirror_given = it != entries.end() && it->second.first.count(k);
                if (mirror_given) {
                    Scalar given = Scalar::parse(it->second.first.at(k), ch);
                    if (given != mirror)
                        throw FileError(line, "entry contradicts graded skew-symmetry of [" +
                                                  std::to_string(j) + "," + std::to_string(i) + "]");
                } else {
                    l.set_bracket(j - 1, i - 1, k - 1, mirror);
                }
            }
        }
    }

    std::vector<Violation> bad = run_validation ? l.validate() : std::vector<Violation>{};
    if (!bad.empty()) {
        const Violation& v = bad.front();
        std::size_t at = 0;
        std::string idx;
        for (std::size_t b : v.indices) {
            idx += (idx.empty() ? "" : ",") + std::to_string(b + 1);
            for (std::size_t c : v.indices) {
                auto it = entries.find({(long)b + 1, (long)c + 1});
                if (it != entries.end() && at == 0) at = it->second.second;
            }
        }
        throw FileError(at, v.axiom + " axiom fails at indices (" + idx + ")" +
                                (bad.size() > 1 ? " (+" + std::to_string(bad.size() - 1) +
                                                      " more violations)"
                                                : ""));
    }
    return l;
}

std::string render_algebra(const LieSuperAlgebra& l) {
    std::ostringstream out;
    long even = l.dim().even;
    out << "lsa 1\n";
    out << "even " << even << "\n";
    out << "odd " << l.dim().odd << "\n";
    out << "char " << l.characteristic() << "\n";
    out << "# " << l.name() << "; basis: e1..e" << even << " even, then odd\n";
    std::size_t t = l.total_dim();
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i; j < t; ++j) {
            if (i == j && l.parity(i) == 0) continue;
            std::ostringstream terms;
            for (std::size_t k = 0; k < t; ++k)
                if (!l.c(i, j, k).is_zero())
                    terms << " " << k + 1 << ":" << l.c(i, j, k).str();
            if (!terms.str().empty())
                out << "[" << i + 1 << "," << j + 1 << "] =" << terms.str() << "\n";
        }
    return out.str();
}

LieSuperAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    if (std::size_t slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (name.size() > 4 && name.substr(name.size() - 4) == ".lsa")
        name.resize(name.size() - 4);
    return parse_algebra(buf.str(), name);
}

void save_algebra_file(const LieSuperAlgebra& l, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_algebra(l);
}

} // namespace lsa
