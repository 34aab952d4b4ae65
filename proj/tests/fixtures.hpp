#ifndef DOMAINLAB_TESTS_FIXTURES_HPP
#define DOMAINLAB_TESTS_FIXTURES_HPP

#include <string>

#include "domainlab/prefcore.hpp"
#include "domainlab/trees.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
    return std::string(DOMAINLAB_DATA_DIR) + "/" + name;
}

inline domainlab::Domain table1() {
    return domainlab::load_domain_file(data_path("table1.dom"));
}
inline domainlab::Domain table1_ext() {
    return domainlab::load_domain_file(data_path("table1_ext.dom"));
}
inline domainlab::Domain table2() {
    return domainlab::load_domain_file(data_path("table2.dom"));
}
inline domainlab::Domain table3() {
    return domainlab::load_domain_file(data_path("table3.dom"));
}
inline domainlab::Domain table4() {
    return domainlab::load_domain_file(data_path("table4.dom"));
}

inline domainlab::Tree load_tree(const std::string& name, const domainlab::Domain& d) {
    std::vector<std::string> labels;
    const auto g = domainlab::load_graph_file(data_path(name), &labels, &d.labels());
    return domainlab::Tree(g);
}

inline domainlab::Tree fig3_tree(const domainlab::Domain& d) {
    return load_tree("fig3.tree", d);
}
inline domainlab::Tree fig6_tree(const domainlab::Domain& d) {
    return load_tree("fig6.tree", d);
}

// All m! orders over a1..am.
inline domainlab::Domain universal(int m) {
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
    std::vector<domainlab::AltId> ranking;
    for (int i = 0; i < m; ++i) ranking.push_back(i);
    std::vector<domainlab::Preference> prefs;
    do {
        prefs.emplace_back(ranking);
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    return domainlab::Domain(labels, std::move(prefs), "universal" + std::to_string(m));
}

}  // namespace fixtures

#endif
