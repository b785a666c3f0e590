#include "permstat/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace permstat {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

int parse_int(const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) throw std::invalid_argument("empty integer token");
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(t, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + t + "'");
    }
    if (pos != t.size()) throw std::invalid_argument("bad integer '" + t + "'");
    return value;
}

std::vector<int> parse_int_list(const std::string& text, char open, char close) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == open) {
        if (t.back() != close) {
            throw std::invalid_argument("unbalanced brackets in '" + text + "'");
        }
        t = trim(t.substr(1, t.size() - 2));
    }
    std::vector<int> out;
    if (t.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = t.find(',', start);
        out.push_back(parse_int(t.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string join_ints(const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string set_text(const std::vector<int>& xs) {
    return "{" + join_ints(xs, ",") + "}";
}

json coeff_json(const BigInt& c) {
    static const BigInt lo(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi(std::numeric_limits<std::int64_t>::max());
    if (c >= lo && c <= hi) return c.convert_to<std::int64_t>();
    return c.str();
}

json poly_to_json(const QPolynomial& p) {
    json arr = json::array();
    for (const BigInt& c : p.coefficients()) arr.push_back(coeff_json(c));
    return arr;
}

json window_to_json(const SignedPermutation& sigma) {
    return json(sigma.window());
}

json bundle_to_json(const StatisticsBundle& b) {
    json j;
    j["inv"] = b.inv;
    j["des_set"] = b.des_set;
    j["des"] = b.des;
    j["neg_of_inverse"] = b.neg_of_inverse;
    j["ell_b"] = b.ell_b;
    j["del_b"] = b.del_b;
    j["ell_l"] = b.ell_l;
    if (b.des_a_set) j["des_a_set"] = *b.des_a_set;
    if (b.rmaj) j["rmaj"] = *b.rmaj;
    if (b.nrmaj) j["nrmaj"] = *b.nrmaj;
    return j;
}

json report_to_json(const VerificationReport& rep) {
    json j;
    j["identity"] = rep.identity;
    j["rank"] = rep.rank;
    if (rep.subset) j["subset"] = rep.subset->members;
    j["lhs"] = poly_to_json(rep.lhs);
    j["rhs"] = poly_to_json(rep.rhs);
    if (rep.aux) j["aux"] = poly_to_json(*rep.aux);
    j["pass"] = rep.pass;
    if (rep.counterexample) j["counterexample"] = window_to_json(*rep.counterexample);
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    j["element_count"] = rep.element_count;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    return j;
}

json psi_stages_to_json(const PsiStages& st) {
    json j;
    j["input"] = window_to_json(st.input);
    j["a_word"] = format_canonical(st.a_word);
    j["projected"] = json(st.projected.window());
    j["transformed"] = json(st.transformed.letters);
    j["s_word"] = format_canonical(st.s_word);
    j["lifted"] = format_canonical(st.lifted);
    j["result"] = window_to_json(st.result);
    return j;
}

struct Letter {
    int index = 0;
    bool inverted = false;
};

Letter parse_letter(const std::string& token, char kind) {
    if (token.size() < 3 || token[0] != kind || token[1] != '_') {
        throw std::invalid_argument("bad generator token '" + token + "'");
    }
    const std::size_t caret = token.find('^');
    const std::size_t num_end = caret == std::string::npos ? token.size() : caret;
    Letter letter;
    letter.index = parse_int(token.substr(2, num_end - 2));
    if (letter.index < 1) {
        throw std::invalid_argument("generator index must be positive in '" + token + "'");
    }
    if (caret != std::string::npos) {
        const std::string exp = token.substr(caret + 1);
        if (exp != "-1" && exp != "{-1}") {
            throw std::invalid_argument("unsupported exponent in '" + token + "'");
        }
        letter.inverted = true;
    }
    return letter;
}

std::vector<std::vector<std::string>> split_factor_groups(const std::string& text) {
    const std::string t = trim(text);
    std::vector<std::vector<std::string>> groups;
    std::size_t i = 0;
    while (i < t.size()) {
        if (std::isspace(static_cast<unsigned char>(t[i]))) {
            ++i;
            continue;
        }
        if (t[i] != '(') {
            throw std::invalid_argument("expected '(' in canonical word");
        }
        const std::size_t close = t.find(')', i);
        if (close == std::string::npos) {
            throw std::invalid_argument("unbalanced '(' in canonical word");
        }
        std::istringstream inner(t.substr(i + 1, close - i - 1));
        std::vector<std::string> tokens;
        std::string token;
        while (inner >> token) tokens.push_back(token);
        if (tokens.empty()) {
            throw std::invalid_argument("empty factor group in canonical word");
        }
        groups.push_back(std::move(tokens));
        i = close + 1;
    }
    if (groups.empty()) {
        throw std::invalid_argument("empty canonical word");
    }
    return groups;
}

/// Shared tail check: letters descend one by one from the level; returns
/// the final ell.  `inverted` reports an exponent on the last letter.
int parse_factor_tail(const std::vector<std::string>& tokens, int level,
                      char kind, bool* inverted) {
    int expect = level;
    *inverted = false;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        const Letter letter = parse_letter(tokens[k], kind);
        if (letter.index != expect) {
            throw std::invalid_argument("factor letters must descend from the level: '" +
                                        tokens[k] + "'");
        }
        if (letter.inverted) {
            if (kind != 'a' || letter.index != 1 || k + 1 != tokens.size()) {
                throw std::invalid_argument("only a trailing a_1 may carry ^-1");
            }
            *inverted = true;
        }
        --expect;
    }
    return expect + 1;
}

}  // namespace

SignedPermutation parse_window(const std::string& text) {
    return SignedPermutation(parse_int_list(text, '[', ']'));
}

LetterWord parse_word(const std::string& text) {
    return LetterWord(parse_int_list(text, '[', ']'));
}

std::string format_window(const SignedPermutation& sigma) {
    return "[" + join_ints(sigma.window(), ",") + "]";
}

std::string format_word(const LetterWord& r) {
    return "[" + join_ints(r.letters, ",") + "]";
}

SubsetB parse_subset(const std::string& text) {
    return SubsetB(parse_int_list(text, '{', '}'));
}

std::string format_subset(const SubsetB& subset) { return set_text(subset.members); }

std::string subset_csv(const SubsetB& subset) { return join_ints(subset.members, ","); }

GroupLabel parse_group_label(const std::string& text) {
    if (text == "s" || text == "S") return GroupLabel::S;
    if (text == "a" || text == "A") return GroupLabel::A;
    if (text == "b" || text == "B") return GroupLabel::B;
    if (text == "l" || text == "L") return GroupLabel::L;
    throw std::invalid_argument("unknown group label '" + text + "'");
}

std::string format_group_label(GroupLabel label) {
    switch (label) {
        case GroupLabel::S: return "S";
        case GroupLabel::A: return "A";
        case GroupLabel::B: return "B";
        case GroupLabel::L: return "L";
    }
    return "?";
}

Statistic parse_statistic(const std::string& text) {
    if (text == "ell_l" || text == "ell_L") return Statistic::ell_l;
    if (text == "nrmaj") return Statistic::nrmaj;
    if (text == "ell_a" || text == "ell_A") return Statistic::ell_a;
    if (text == "rmaj") return Statistic::rmaj;
    throw std::invalid_argument("unknown statistic '" + text + "'");
}

std::string format_canonical(const SCanonicalWord& word) {
    if (word.factors.empty()) return "(1)";
    std::string out;
    for (const SFactor& f : word.factors) {
        out += "(";
        if (f.is_identity()) {
            out += "1";
        } else {
            for (int i = f.level; i >= f.ell; --i) {
                out += "s_" + std::to_string(i);
                if (i > f.ell) out += " ";
            }
        }
        out += ")";
    }
    return out;
}

std::string format_canonical(const ACanonicalWord& word) {
    if (word.factors.empty()) return "(1)";
    std::string out;
    for (const AFactor& f : word.factors) {
        out += "(";
        if (f.is_identity()) {
            out += "1";
        } else {
            for (int i = f.level; i >= f.ell; --i) {
                out += "a_" + std::to_string(i);
                if (i == 1 && f.inverted) out += "^-1";
                if (i > f.ell) out += " ";
            }
        }
        out += ")";
    }
    return out;
}

SCanonicalWord parse_canonical_s(const std::string& text) {
    const auto groups = split_factor_groups(text);
    SCanonicalWord word;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const int level = static_cast<int>(g) + 1;
        if (groups[g].size() == 1 && groups[g][0] == "1") {
            word.factors.push_back(SFactor{level, level + 1});
            continue;
        }
        bool inverted = false;
        const int ell = parse_factor_tail(groups[g], level, 's', &inverted);
        word.factors.push_back(SFactor{level, ell});
    }
    return word;
}

ACanonicalWord parse_canonical_a(const std::string& text) {
    const auto groups = split_factor_groups(text);
    ACanonicalWord word;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const int level = static_cast<int>(g) + 1;
        if (groups[g].size() == 1 && groups[g][0] == "1") {
            word.factors.push_back(AFactor{level, level + 1, false});
            continue;
        }
        bool inverted = false;
        const int ell = parse_factor_tail(groups[g], level, 'a', &inverted);
        word.factors.push_back(AFactor{level, ell, inverted});
    }
    return word;
}

std::string format_trace(const PhiTrace& trace) {
    std::string out;
    for (const auto& step : trace.steps) {
        std::string line;
        for (const LetterWord& compartment : step) {
            line += join_ints(compartment.letters, " ");
            line += " |";
            if (&compartment != &step.back()) line += " ";
        }
        out += line + "\n";
    }
    out += join_ints(trace.result.letters, " ") + "\n";
    return out;
}

std::string format_statistics_text(const StatisticsBundle& b) {
    std::ostringstream os;
    os << "inv            = " << b.inv << "\n";
    os << "des_set        = " << set_text(b.des_set) << "\n";
    os << "des            = " << b.des << "\n";
    os << "neg_of_inverse = " << set_text(b.neg_of_inverse) << "\n";
    os << "ell_b          = " << b.ell_b << "\n";
    os << "del_b          = " << b.del_b << "\n";
    os << "ell_l          = " << b.ell_l << "\n";
    if (b.des_a_set) os << "des_a_set      = " << set_text(*b.des_a_set) << "\n";
    if (b.rmaj) os << "rmaj           = " << *b.rmaj << "\n";
    if (b.nrmaj) os << "nrmaj          = " << *b.nrmaj << "\n";
    return os.str();
}

std::string format_report_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "[" << (rep.pass ? "PASS" : "FAIL") << "] " << rep.identity
       << " rank " << rep.rank;
    if (rep.subset) os << " subset " << format_subset(*rep.subset);
    os << ": " << rep.element_count << " elements in " << rep.elapsed_seconds
       << "s\n";
    os << "  lhs = " << rep.lhs.to_string() << "\n";
    os << "  rhs = " << rep.rhs.to_string() << "\n";
    if (rep.aux) os << "  aux = " << rep.aux->to_string() << "\n";
    if (rep.counterexample) {
        os << "  counterexample = " << format_window(*rep.counterexample) << "\n";
    }
    if (!rep.detail.empty()) os << "  detail = " << rep.detail << "\n";
    return os.str();
}

std::string format_psi_stages_text(const PsiStages& st) {
    std::ostringstream os;
    os << "input       = " << format_window(st.input) << "\n";
    os << "a-word      = " << format_canonical(st.a_word) << "\n";
    os << "projected   = " << format_window(st.projected) << "\n";
    os << "transformed = " << format_word(st.transformed) << "\n";
    os << "s-word      = " << format_canonical(st.s_word) << "\n";
    os << "lifted      = " << format_canonical(st.lifted) << "\n";
    os << "result      = " << format_window(st.result) << "\n";
    return os.str();
}

std::string format_theta_stages_text(const ThetaStages& st) {
    std::ostringstream os;
    os << "input       = " << format_window(st.input) << "\n";
    os << "sigma       = " << format_window(st.split.sigma) << "\n";
    os << "u           = " << format_window(st.split.u) << "\n";
    std::istringstream psi_lines(format_psi_stages_text(st.psi));
    std::string line;
    while (std::getline(psi_lines, line)) os << "psi." << line << "\n";
    os << "result      = " << format_window(st.result) << "\n";
    return os.str();
}

std::string window_json(const SignedPermutation& sigma) {
    return window_to_json(sigma).dump();
}

std::string statistics_json(const StatisticsBundle& bundle) {
    return bundle_to_json(bundle).dump(2);
}

std::string poly_json(const QPolynomial& p) { return poly_to_json(p).dump(); }

std::string image_json(const SignedPermutation& input,
                       const SignedPermutation& result) {
    json j;
    j["input"] = window_to_json(input);
    j["result"] = window_to_json(result);
    return j.dump(2);
}

std::string decomposition_json(const Decomposition& d) {
    json j;
    j["sigma"] = window_to_json(d.sigma);
    j["u"] = window_to_json(d.u);
    return j.dump(2);
}

std::string canonical_json(const SignedPermutation& input,
                           const SCanonicalWord& word) {
    json j;
    j["window"] = window_to_json(input);
    j["group"] = "s";
    j["word"] = format_canonical(word);
    j["letters"] = word.letters();
    return j.dump(2);
}

std::string canonical_json(const SignedPermutation& input,
                           const ACanonicalWord& word) {
    json j;
    j["window"] = window_to_json(input);
    j["group"] = "a";
    j["word"] = format_canonical(word);
    j["letters"] = word.letters();
    return j.dump(2);
}

std::string phi_json(const LetterWord& input, const LetterWord& result) {
    json j;
    j["input"] = json(input.letters);
    j["result"] = json(result.letters);
    return j.dump(2);
}

std::string trace_json(const LetterWord& input, const PhiTrace& trace) {
    json j;
    j["input"] = json(input.letters);
    json steps = json::array();
    for (const auto& step : trace.steps) {
        json compartments = json::array();
        for (const LetterWord& c : step) compartments.push_back(json(c.letters));
        steps.push_back(std::move(compartments));
    }
    j["steps"] = std::move(steps);
    j["result"] = json(trace.result.letters);
    return j.dump(2);
}

std::string psi_stages_json(const PsiStages& st) {
    return psi_stages_to_json(st).dump(2);
}

std::string theta_stages_json(const ThetaStages& st) {
    json j;
    j["input"] = window_to_json(st.input);
    j["sigma"] = window_to_json(st.split.sigma);
    j["u"] = window_to_json(st.split.u);
    j["psi"] = psi_stages_to_json(st.psi);
    j["result"] = window_to_json(st.result);
    return j.dump(2);
}

std::string report_json(const VerificationReport& rep) {
    return report_to_json(rep).dump(2);
}

std::string reports_json(const std::vector<VerificationReport>& reps) {
    json arr = json::array();
    for (const auto& rep : reps) arr.push_back(report_to_json(rep));
    return arr.dump(2);
}

std::string poly_table_json(
    int rank, const std::vector<std::pair<SubsetB, QPolynomial>>& rows) {
    json arr = json::array();
    for (const auto& [subset, p] : rows) {
        json row;
        row["rank"] = rank;
        row["subset"] = subset.members;
        row["coefficients"] = poly_to_json(p);
        arr.push_back(std::move(row));
    }
    return arr.dump(2);
}

std::string poly_csv_header() { return "rank,subset,coefficients"; }

std::string poly_csv_row(int rank, const SubsetB& subset, const QPolynomial& p) {
    std::string coeffs;
    const auto& cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) coeffs += ",";
        coeffs += cs[i].str();
    }
    if (cs.empty()) coeffs = "0";
    return std::to_string(rank) + ",\"" + subset_csv(subset) + "\",\"" + coeffs +
           "\"";
}

}  // namespace permstat
