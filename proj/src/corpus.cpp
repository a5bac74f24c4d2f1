#include "quivarr/corpus.hpp"

namespace quivarr {

namespace {

Hyperplane plane(Rational c, Vector n) { return make_hyperplane(c, n); }

}  // namespace

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;
    out.push_back({"empty", make_arrangement(1, {})});
    out.push_back({"single", make_arrangement(1, {plane(0, {1})})});
    out.push_back({"boolean2", make_arrangement(2, {plane(0, {1, 0}), plane(0, {0, 1})})});
    out.push_back({"boolean3", make_arrangement(3, {plane(0, {1, 0, 0}), plane(0, {0, 1, 0}), plane(0, {0, 0, 1})})});
    out.push_back({"three_lines", make_arrangement(2, {plane(0, {1, 0}), plane(0, {0, 1}), plane(0, {1, -1})})});
    out.push_back({"parallel", make_arrangement(2, {plane(0, {1, 0}), plane(-1, {1, 0})})});
    out.push_back({"c13", discriminantal({3}).arrangement});
    out.push_back({"c14", discriminantal({4}).arrangement});
    out.push_back({"generic3", make_arrangement(2, {plane(0, {1, 0}), plane(0, {0, 1}), plane(-1, {1, 1})})});
    return out;
}

Arrangement corpus_arrangement(const std::string& name) {
    for (auto& e : corpus())
        if (e.name == name) return e.arrangement;
    throw std::invalid_argument("unknown corpus arrangement: " + name);
}

}  // namespace quivarr
