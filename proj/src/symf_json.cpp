#include "fdr/symf_json.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fdr {

namespace {

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

PolyQT parse_polyqt(const std::string& input) {
    std::string s = trimmed(input);
    if (s.empty()) throw std::invalid_argument("parse_polyqt: empty string");
    if (s == "0") return PolyQT();
    PolyQT out;
    size_t pos = 0;
    int sign = 1;
    if (s[pos] == '-') { sign = -1; ++pos; }
    auto skip_spaces = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    auto parse_int = [&](const char* what) {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument(std::string("parse_polyqt: expected ") + what);
        return s.substr(start, pos - start);
    };
    while (true) {
        skip_spaces();
        mpz_class c(1);
        int dq = 0, dt = 0;
        bool have_coeff = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
        if (have_coeff) c = mpz_class(parse_int("integer"));
        auto parse_var = [&] {
            if (pos >= s.size() || (s[pos] != 'q' && s[pos] != 't')) return false;
            char v = s[pos++];
            int d = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                d = std::stoi(parse_int("exponent"));
            }
            (v == 'q' ? dq : dt) += d;
            return true;
        };
        if (!have_coeff && !parse_var())
            throw std::invalid_argument("parse_polyqt: expected a term in '" + input + "'");
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            if (!parse_var()) throw std::invalid_argument("parse_polyqt: expected q or t after '*'");
        }
        out += PolyQT::monomial(sign * c, dq, dt);
        skip_spaces();
        if (pos >= s.size()) break;
        if (s[pos] == '+') sign = 1;
        else if (s[pos] == '-') sign = -1;
        else throw std::invalid_argument("parse_polyqt: unexpected character in '" + input + "'");
        ++pos;
    }
    return out;
}

RatFuncQT parse_ratfunc(const std::string& input) {
    std::string s = trimmed(input);
    {
        // plain integers and rationals ("-2", "3/4") are valid coefficients too
        mpq_class x;
        if (!s.empty() && x.set_str(s, 10) == 0) {
            x.canonicalize();
            return RatFuncQT(x);
        }
    }
    size_t split = s.find(")/(");
    if (!s.empty() && s.front() == '(' && s.back() == ')' && split != std::string::npos) {
        std::string num = s.substr(1, split - 1);
        std::string den = s.substr(split + 3, s.size() - split - 4);
        return RatFuncQT(parse_polyqt(num), parse_polyqt(den));
    }
    return RatFuncQT(parse_polyqt(s));
}

mpq_class parse_mpq(const std::string& input) {
    std::string s = trimmed(input);
    mpq_class x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("parse_mpq: bad rational '" + input + "'");
    x.canonicalize();
    return x;
}

namespace {

nlohmann::json lambda_to_json(const Partition& lam) {
    nlohmann::json arr = nlohmann::json::array();
    for (int p : lam.parts()) arr.push_back(p);
    return arr;
}

Partition lambda_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("SymF JSON: lambda must be an array");
    std::vector<int> parts;
    for (const auto& v : arr) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

template <class C>
nlohmann::json symf_to_json_impl(const SymF<C>& f) {
    nlohmann::json j;
    j["basis"] = std::string(1, char(f.basis()));
    j["degree"] = f.degree();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, c] : f.terms())
        terms.push_back({{"lambda", lambda_to_json(lam)}, {"coeff", CoeffOps<C>::str(c)}});
    j["terms"] = std::move(terms);
    return j;
}

struct ParsedSymF {
    Basis basis;
    std::vector<std::pair<Partition, std::string>> terms;
};

ParsedSymF parse_symf_shell(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw std::invalid_argument("SymF JSON: need object with basis and terms");
    std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1 || std::string("mehpsH").find(b[0]) == std::string::npos)
        throw std::invalid_argument("SymF JSON: unknown basis '" + b + "'");
    ParsedSymF out;
    out.basis = Basis(b[0]);
    int degree = -1;
    for (const auto& term : j.at("terms")) {
        Partition lam = lambda_from_json(term.at("lambda"));
        if (degree == -1) degree = lam.size();
        else if (lam.size() != degree)
            throw std::invalid_argument("SymF JSON: inhomogeneous term list");
        out.terms.emplace_back(std::move(lam), term.at("coeff").get<std::string>());
    }
    if (j.contains("degree") && degree != -1 && j.at("degree").get<int>() != degree)
        throw std::invalid_argument("SymF JSON: degree field disagrees with terms");
    return out;
}

}  // namespace

nlohmann::json symf_to_json(const SymF<mpq_class>& f) { return symf_to_json_impl(f); }
nlohmann::json symf_to_json(const SymF<RatFuncQT>& f) { return symf_to_json_impl(f); }

SymF<mpq_class> symf_q_from_json(const nlohmann::json& j) {
    ParsedSymF p = parse_symf_shell(j);
    if (p.basis == Basis::H)
        throw std::invalid_argument("SymF JSON: basis H needs a Macdonald expansion reader");
    SymF<mpq_class> f(p.basis);
    for (auto& [lam, cs] : p.terms) f.add_term(lam, parse_mpq(cs));
    return f;
}

SymF<RatFuncQT> symf_qt_from_json(const nlohmann::json& j) {
    ParsedSymF p = parse_symf_shell(j);
    if (p.basis == Basis::H)
        throw std::invalid_argument("SymF JSON: basis H needs a Macdonald expansion reader");
    SymF<RatFuncQT> f(p.basis);
    for (auto& [lam, cs] : p.terms) f.add_term(lam, parse_ratfunc(cs));
    return f;
}

MacdonaldExpansion macdonald_expansion_from_json(const nlohmann::json& j) {
    ParsedSymF p = parse_symf_shell(j);
    if (p.basis != Basis::H)
        throw std::invalid_argument("Macdonald expansion JSON: basis must be H");
    MacdonaldExpansion exp;
    for (auto& [lam, cs] : p.terms) {
        exp.degree = lam.size();
        RatFuncQT c = parse_ratfunc(cs);
        if (!c.is_zero()) exp.coefficients.emplace(std::move(lam), std::move(c));
    }
    return exp;
}

nlohmann::json bigraded_table_to_json(const BigradedTable& t) {
    if (t.entries.empty()) return nlohmann::json::object();
    nlohmann::json j;
    j["n"] = t.n;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [ij, f] : t.entries)
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"frobenius", symf_to_json(f)}});
    j["entries"] = std::move(entries);
    return j;
}

BigradedTable bigraded_table_from_json(const nlohmann::json& j) {
    BigradedTable t;
    if (j.is_object() && j.empty()) return t;
    t.n = j.at("n").get<int>();
    for (const auto& e : j.at("entries")) {
        SymF<mpq_class> f = symf_q_from_json(e.at("frobenius"));
        if (!f.is_zero())
            t.entries.emplace(std::pair{e.at("i").get<int>(), e.at("j").get<int>()},
                              std::move(f));
    }
    return t;
}

std::string bigraded_table_to_text(const BigradedTable& t) {
    if (t.entries.empty()) return "(empty)\n";
    std::ostringstream os;
    for (const auto& [ij, f] : t.entries)
        os << "(" << ij.first << "," << ij.second << "): " << f.to_string() << "\n";
    return os.str();
}

nlohmann::json char_table_to_json(const CharTable& t) {
    nlohmann::json j;
    j["n"] = t.n();
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& lam : t.partitions()) parts.push_back(lambda_to_json(lam));
    j["partitions"] = std::move(parts);
    nlohmann::json rows = nlohmann::json::array();
    int count = int(t.partitions().size());
    for (int l = 0; l < count; ++l) {
        nlohmann::json row = nlohmann::json::array();
        for (int m = 0; m < count; ++m) row.push_back(t.chi(l, m).get_str());
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    return j;
}

std::string char_table_to_text(const CharTable& t) {
    const auto& parts = t.partitions();
    int count = int(parts.size());
    std::vector<std::string> labels;
    size_t w = 0;
    for (const auto& lam : parts) {
        labels.push_back(lam.to_string());
        w = std::max(w, labels.back().size());
    }
    std::vector<std::vector<std::string>> cells(static_cast<size_t>(count));
    std::vector<size_t> colw(static_cast<size_t>(count));
    for (int m = 0; m < count; ++m) colw[size_t(m)] = labels[size_t(m)].size();
    for (int l = 0; l < count; ++l) {
        cells[size_t(l)].resize(size_t(count));
        for (int m = 0; m < count; ++m) {
            cells[size_t(l)][size_t(m)] = t.chi(l, m).get_str();
            colw[size_t(m)] = std::max(colw[size_t(m)], cells[size_t(l)][size_t(m)].size());
        }
    }
    std::ostringstream os;
    os << std::setw(int(w)) << "" << " |";
    for (int m = 0; m < count; ++m) os << " " << std::setw(int(colw[size_t(m)])) << labels[size_t(m)];
    os << "\n";
    for (int l = 0; l < count; ++l) {
        os << std::setw(int(w)) << labels[size_t(l)] << " |";
        for (int m = 0; m < count; ++m)
            os << " " << std::setw(int(colw[size_t(m)])) << cells[size_t(l)][size_t(m)];
        os << "\n";
    }
    return os.str();
}

}  // namespace fdr
