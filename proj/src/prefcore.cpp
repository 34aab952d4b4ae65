#include "domainlab/prefcore.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace domainlab {

Preference::Preference(std::vector<AltId> ranking) : ranking_(std::move(ranking)) {
    const int m = static_cast<int>(ranking_.size());
    if (m == 0) throw ParseError("preference must rank at least one alternative");
    pos_.assign(static_cast<size_t>(m), -1);
    for (int r = 0; r < m; ++r) {
        const AltId a = ranking_[static_cast<size_t>(r)];
        if (a < 0 || a >= m) throw ParseError("ranking refers to unknown alternative id");
        if (pos_[static_cast<size_t>(a)] != -1)
            throw ParseError("ranking is not a permutation: repeated alternative");
        pos_[static_cast<size_t>(a)] = r;
    }
}

Domain::Domain(std::vector<std::string> labels, std::vector<Preference> prefs,
               std::string name)
    : labels_(std::move(labels)), prefs_(std::move(prefs)), name_(std::move(name)) {
    if (labels_.empty()) throw ParseError("empty alternative list");
    for (size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw ParseError("empty alternative label");
        for (size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw ParseError("duplicate label: " + labels_[i]);
    }
    for (const auto& p : prefs_)
        if (p.m() != m()) throw ParseError("preference over wrong alternative set");
    for (size_t i = 0; i < prefs_.size(); ++i)
        for (size_t j = i + 1; j < prefs_.size(); ++j)
            if (prefs_[i] == prefs_[j])
                throw ParseError("duplicate preference at rows " + std::to_string(i + 1) +
                                 " and " + std::to_string(j + 1));
    by_peak_.assign(labels_.size(), {});
    for (int i = 0; i < size(); ++i)
        by_peak_[static_cast<size_t>(prefs_[static_cast<size_t>(i)].top())].push_back(i);
}

std::optional<AltId> Domain::id_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<AltId>(i);
    return std::nullopt;
}

bool Domain::minimally_rich() const {
    for (const auto& v : by_peak_)
        if (v.empty()) return false;
    return true;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

Domain domain_from_rows(const std::vector<std::string>& labels,
                        const std::vector<std::vector<std::string>>& rows,
                        const std::string& name) {
    if (labels.empty()) throw ParseError("empty alternative list");
    auto id_of = [&](const std::string& lab) -> AltId {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == lab) return static_cast<AltId>(i);
        throw ParseError("unknown alternative label: " + lab);
    };
    std::vector<Preference> prefs;
    for (const auto& row : rows) {
        if (row.size() != labels.size())
            throw ParseError("ranking does not list all alternatives exactly once");
        std::vector<AltId> ranking;
        ranking.reserve(row.size());
        for (const auto& lab : row) ranking.push_back(id_of(lab));
        prefs.emplace_back(std::move(ranking));
    }
    return Domain(labels, std::move(prefs), name);
}

Domain parse_domain_json(const std::string& text, const std::string& name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON domain file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("alternatives") || !j.contains("prefs"))
        throw ParseError("JSON domain file needs \"alternatives\" and \"prefs\"");
    std::vector<std::string> labels = j["alternatives"].get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> rows =
        j["prefs"].get<std::vector<std::vector<std::string>>>();
    std::string nm = name;
    if (j.contains("name") && nm.empty()) nm = j["name"].get<std::string>();
    return domain_from_rows(labels, rows, nm);
}

}  // namespace

Domain parse_domain(const std::string& text, const std::string& name, bool as_json) {
    if (as_json) return parse_domain_json(text, name);
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> rows;
    bool saw_alternatives = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = tokens(line);
        if (toks.empty()) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (!saw_alternatives) {
            if (toks[0] != "alternatives:")
                throw ParseError("expected 'alternatives:' line first" + where);
            labels.assign(toks.begin() + 1, toks.end());
            saw_alternatives = true;
        } else {
            if (toks[0] != "pref:") throw ParseError("expected 'pref:' line" + where);
            rows.emplace_back(toks.begin() + 1, toks.end());
        }
    }
    if (!saw_alternatives) throw ParseError("missing 'alternatives:' line");
    return domain_from_rows(labels, rows, name);
}

Domain load_domain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open domain file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    std::string name = path;
    const auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot != std::string::npos) name = name.substr(0, dot);
    return parse_domain(buf.str(), name, json);
}

std::string domain_to_text(const Domain& d) {
    std::ostringstream out;
    out << "alternatives:";
    for (const auto& lab : d.labels()) out << ' ' << lab;
    out << '\n';
    for (const auto& p : d.prefs()) {
        out << "pref:";
        for (AltId a : p.ranking()) out << ' ' << d.label(a);
        out << '\n';
    }
    return out.str();
}

int rank_of(const Preference& p, AltId a) { return p.rank_of(a); }

bool is_complete_reversal(const Preference& p, const Preference& q) {
    if (p.m() != q.m()) return false;
    const int m = p.m();
    for (int r = 0; r < m; ++r)
        if (p.ranking()[static_cast<size_t>(r)] !=
            q.ranking()[static_cast<size_t>(m - 1 - r)])
            return false;
    return true;
}

AltId best_in(const Preference& p, const std::vector<AltId>& B) {
    if (B.empty()) throw std::invalid_argument("best_in: empty set");
    AltId best = B.front();
    for (AltId a : B)
        if (p.prefers(a, best)) best = a;
    return best;
}

AltId worst_in(const Preference& p, const std::vector<AltId>& B) {
    if (B.empty()) throw std::invalid_argument("worst_in: empty set");
    AltId worst = B.front();
    for (AltId a : B)
        if (p.prefers(worst, a)) worst = a;
    return worst;
}

std::vector<AltId> restrict(const Preference& p, const std::vector<AltId>& B) {
    if (B.empty()) throw std::invalid_argument("restrict: empty set");
    std::vector<AltId> out(B);
    std::sort(out.begin(), out.end(),
              [&](AltId a, AltId b) { return p.prefers(a, b); });
    return out;
}

std::vector<AltId> seconds_set(const Domain& d, AltId x) {
    std::vector<AltId> out;
    if (d.m() < 2) return out;
    for (int i : d.prefs_with_peak(x)) {
        const AltId second = d.pref(i).ranking()[1];
        if (std::find(out.begin(), out.end(), second) == out.end()) out.push_back(second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace domainlab
