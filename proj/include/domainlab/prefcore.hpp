#ifndef DOMAINLAB_PREFCORE_HPP
#define DOMAINLAB_PREFCORE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace domainlab {

/// Dense alternative index, 0..m-1 in file order.
using AltId = int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A strict linear order over alternatives, best first.
///
/// Stores the ranking together with its inverse so that rank lookups are
/// O(1). Immutable after construction.
class Preference {
public:
    explicit Preference(std::vector<AltId> ranking);

    int m() const { return static_cast<int>(ranking_.size()); }
    const std::vector<AltId>& ranking() const { return ranking_; }

    AltId top() const { return ranking_.front(); }
    AltId bottom() const { return ranking_.back(); }

    /// 1-based rank of `a`.
    int rank_of(AltId a) const { return pos_[static_cast<size_t>(a)] + 1; }

    /// true iff `a` is strictly above `b`.
    bool prefers(AltId a, AltId b) const {
        return pos_[static_cast<size_t>(a)] < pos_[static_cast<size_t>(b)];
    }

    bool operator==(const Preference& other) const { return ranking_ == other.ranking_; }

private:
    std::vector<AltId> ranking_;
    std::vector<int> pos_;  // pos_[alt] = 0-based position in ranking_
};

/// A named finite set of distinct preferences over a common alternative set.
class Domain {
public:
    Domain(std::vector<std::string> labels, std::vector<Preference> prefs,
           std::string name = "");

    int m() const { return static_cast<int>(labels_.size()); }
    int size() const { return static_cast<int>(prefs_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(AltId a) const { return labels_[static_cast<size_t>(a)]; }
    const std::vector<Preference>& prefs() const { return prefs_; }
    const Preference& pref(int i) const { return prefs_[static_cast<size_t>(i)]; }

    std::optional<AltId> id_of(const std::string& label) const;

    /// Indices of preferences whose peak is `a` (file order).
    const std::vector<int>& prefs_with_peak(AltId a) const {
        return by_peak_[static_cast<size_t>(a)];
    }
    bool minimally_rich() const;

    /// "P<k>" with k 1-based, matching the paper's table columns.
    std::string pref_name(int i) const { return "P" + std::to_string(i + 1); }

private:
    std::vector<std::string> labels_;
    std::vector<Preference> prefs_;
    std::string name_;
    std::vector<std::vector<int>> by_peak_;
};

/// An ordered list of voters' preferences, as indices into a Domain.
struct Profile {
    std::vector<int> voters;

    int n() const { return static_cast<int>(voters.size()); }
    int operator[](int i) const { return voters[static_cast<size_t>(i)]; }
};

/// Parses the line-based domain-file grammar (or the JSON equivalent when
/// `as_json` is set). Throws ParseError on malformed input.
Domain parse_domain(const std::string& text, const std::string& name = "",
                    bool as_json = false);
Domain load_domain_file(const std::string& path);
std::string domain_to_text(const Domain& d);

int rank_of(const Preference& p, AltId a);
bool is_complete_reversal(const Preference& p, const Preference& q);
AltId best_in(const Preference& p, const std::vector<AltId>& B);
AltId worst_in(const Preference& p, const std::vector<AltId>& B);

/// Induced order over B, preserving p's relative ranking.
std::vector<AltId> restrict(const Preference& p, const std::vector<AltId>& B);

/// { r2(p) : p in d, r1(p) = x }, sorted by id.
std::vector<AltId> seconds_set(const Domain& d, AltId x);

}  // namespace domainlab

#endif
