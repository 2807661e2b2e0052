#ifndef TERRACINI_CATALOG_HPP
#define TERRACINI_CATALOG_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "terracini/report.hpp"
#include "terracini/variety.hpp"

namespace terracini {

// A named variety with pinned regression invariants and, for fourfolds, the
// classification case its report must be compatible with.
struct CatalogEntry {
  std::string name;
  std::string pinned_case; // empty when not a classified fourfold
  std::set<std::string> extra_tags;
  std::map<std::string, int> expected;
  VarietyRecipe recipe;
};

namespace detail {

template <class F>
ParamVariety<typename F::Scalar> build_v42_projection(const F &field,
                                                      const std::string &kind) {
  using K = typename F::Scalar;
  ParamVariety<K> V = veronese(field, 4, 2);
  std::vector<std::vector<K>> rows;
  auto at = [&](long long a, long long b, long long c, long long e) {
    return V.eval({field.from_int(a), field.from_int(b), field.from_int(c),
                   field.from_int(e)});
  };
  if (kind == "point") {
    rows.push_back(at(1, 1, 1, 1));
  } else if (kind == "conic") {
    // plane of the conic that is the image of a line in the parameter space
    for (long long t : {0, 1, 2})
      rows.push_back(at(t, 0, 0, 0));
  } else if (kind == "quartic") {
    // 4-space of the rational normal quartic, image of a conic
    for (long long t : {0, 1, 2, -1, 3})
      rows.push_back(at(t, t * t, 0, 0));
  } else {
    throw Error("unknown projection kind " + kind);
  }
  ParamVariety<K> X =
      project(V, Matrix<K>::from_rows(rows, field.zero()));
  X.name = "v42-proj-" + kind;
  X.tags = {"smooth-claimed"};
  return X;
}

template <class Fn>
CatalogEntry entry(const std::string &name, Fn builder,
                   std::map<std::string, int> expected,
                   const std::string &pinned_case = "",
                   std::set<std::string> extra_tags = {}) {
  CatalogEntry e;
  e.name = name;
  e.pinned_case = pinned_case;
  e.extra_tags = extra_tags;
  e.expected = expected;
  e.recipe = make_recipe([=](auto field) {
    auto X = builder(field);
    X.name = name;
    for (const std::string &t : extra_tags)
      X.tags.insert(t);
    X.expected = expected;
    return X;
  });
  return e;
}

} // namespace detail

// Every variety the defect suites run over, with its pinned invariants.
inline const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    using detail::entry;
    std::vector<CatalogEntry> list;
    list.push_back(entry(
        "veronese:2:2", [](auto f) { return veronese(f, 2, 2); },
        {{"s", 4}, {"delta", 1}, {"f", 1}, {"t", 0}, {"d", 0}, {"gamma", 1},
         {"epsilon", 1}, {"theta", 2}, {"species", 1}, {"vertex", -1}}));
    list.push_back(entry(
        "veronese:3:2", [](auto f) { return veronese(f, 3, 2); },
        {{"s", 6}, {"delta", 1}, {"f", 1}, {"t", 0}, {"d", 0}, {"gamma", 1},
         {"epsilon", 1}, {"theta", 2}, {"species", 2}, {"vertex", -1}}));
    list.push_back(entry(
        "veronese:4:2", [](auto f) { return veronese(f, 4, 2); },
        {{"s", 8}, {"delta", 1}, {"f", 1}, {"t", 0}, {"d", 0}, {"gamma", 1},
         {"epsilon", 1}, {"theta", 2}, {"species", 3}, {"vertex", -1}},
        "(viii)"));
    list.push_back(entry(
        "veronese:1:3", [](auto f) { return veronese(f, 1, 3); },
        {{"s", 3}, {"delta", 0}, {"f", 0}}));
    list.push_back(entry(
        "segre:1:1", [](auto f) { return segre(f, 1, 1); },
        {{"s", 3}, {"delta", 0}, {"f", 2}, {"t", 0}, {"d", 0}}));
    list.push_back(entry(
        "segre:1:2", [](auto f) { return segre(f, 1, 2); },
        {{"s", 5}, {"delta", 0}, {"f", 2}, {"t", 0}, {"d", 1}}));
    list.push_back(entry(
        "segre:2:2", [](auto f) { return segre(f, 2, 2); },
        {{"s", 7}, {"delta", 1}, {"f", 2}, {"t", 0}, {"d", 0}, {"gamma", 2},
         {"epsilon", 2}, {"theta", 3}, {"species", 2}, {"vertex", -1}},
        "(iv)"));
    list.push_back(entry(
        "segre:2:3", [](auto f) { return segre(f, 2, 3); },
        {{"s", 9}, {"delta", 2}, {"f", 2}, {"t", 0}, {"d", 1}, {"gamma", 2},
         {"epsilon", 3}, {"theta", 3}, {"species", 3}, {"vertex", -1}}));
    list.push_back(entry(
        "rnc:4", [](auto f) { return rational_normal_curve(f, 4); },
        {{"s", 3}, {"delta", 0}, {"f", 0}}));
    list.push_back(entry(
        "cone:3:rnc:4",
        [](auto f) { return cone_over(rational_normal_curve(f, 4), 3); },
        {{"s", 6}, {"delta", 1}, {"f", 3}, {"t", 3}, {"d", 3}, {"gamma", 3},
         {"epsilon", 3}, {"theta", 4}, {"species", 1}, {"vertex", 2}},
        "(i)"));
    list.push_back(entry(
        "cone:1:veronese:2:2",
        [](auto f) { return cone_over(veronese(f, 2, 2), 1); },
        {{"s", 5}, {"delta", 1}, {"f", 2}, {"t", 1}, {"d", 1}, {"gamma", 2},
         {"epsilon", 2}, {"theta", 3}, {"species", 1}, {"vertex", 0}}));
    list.push_back(entry(
        "cone:2:veronese:2:2",
        [](auto f) { return cone_over(veronese(f, 2, 2), 2); },
        {{"s", 6}, {"delta", 1}, {"f", 3}, {"t", 2}, {"d", 2}, {"gamma", 3},
         {"epsilon", 3}, {"theta", 4}, {"species", 1}, {"vertex", 1}},
        "(i)"));
    list.push_back(entry(
        "cone:1:veronese:3:2",
        [](auto f) { return cone_over(veronese(f, 3, 2), 1); },
        {{"s", 7}, {"delta", 2}, {"f", 2}, {"t", 1}, {"d", 1}, {"gamma", 2},
         {"epsilon", 2}, {"theta", 3}, {"species", 2}, {"vertex", 0}},
        "(i)"));
    list.push_back(entry(
        "cone:1:segre:2:2",
        [](auto f) { return cone_over(segre(f, 2, 2), 1); },
        {{"s", 8}, {"delta", 1}, {"f", 3}, {"t", 1}, {"d", 1}, {"gamma", 3},
         {"epsilon", 3}, {"theta", 4}, {"species", 2}, {"vertex", 0}}));
    // For a scroll in 3-spaces the bitangent contact condition inside a
    // ruling is a single linear condition on the three ruling parameters,
    // so the tangential contact locus contains a plane: gamma = 2.
    list.push_back(entry(
        "scroll-ex1", [](auto f) { return scroll_ex1(f); },
        {{"s", 8}, {"delta", 1}, {"f", 1}, {"t", 1}, {"d", 2}, {"gamma", 2},
         {"epsilon", 2}, {"theta", 4}, {"species", 2}, {"vertex", -1}},
        "(v)"));
    list.push_back(entry(
        "scroll-ex2", [](auto f) { return scroll_ex2(f); },
        {{"s", 8}, {"delta", 1}, {"f", 1}, {"t", 1}, {"d", 2}, {"gamma", 2},
         {"epsilon", 2}, {"theta", 4}, {"species", 2}, {"vertex", -1}},
        "(vi)"));
    list.push_back(entry(
        "scroll-ex3", [](auto f) { return scroll_ex3(f); },
        {{"s", 8}, {"delta", 1}, {"f", 1}, {"t", 1}, {"d", 2}, {"gamma", 2},
         {"epsilon", 2}, {"theta", 4}, {"species", 2}, {"vertex", -1}},
        "(vii)"));
    list.push_back(entry(
        "v42-proj-point",
        [](auto f) { return detail::build_v42_projection(f, "point"); },
        {{"s", 8}, {"delta", 1}, {"f", 1}, {"t", 0}, {"d", 0}, {"gamma", 1},
         {"epsilon", 1}, {"theta", 2}, {"species", 3}, {"vertex", -1}},
        "(viii)"));
    list.push_back(entry(
        "v42-proj-conic",
        [](auto f) { return detail::build_v42_projection(f, "conic"); },
        {{"s", 8}, {"delta", 1}, {"f", 1}, {"gamma", 1}, {"epsilon", 2},
         {"theta", 2}, {"species", 3}, {"vertex", -1}},
        "(ix)"));
    list.push_back(entry(
        "v42-proj-quartic",
        [](auto f) { return detail::build_v42_projection(f, "quartic"); },
        {{"s", 8}, {"delta", 1}, {"f", 1}, {"gamma", 1}, {"epsilon", 1},
         {"theta", 2}, {"species", 3}, {"vertex", -1}},
        "(x)"));
    return list;
  }();
  return entries;
}

inline const CatalogEntry *catalog_find(const std::string &name) {
  for (const CatalogEntry &e : catalog())
    if (e.name == name)
      return &e;
  return nullptr;
}

// Resolves a builtin name: a catalog entry verbatim, or a structural name
// like "veronese:3:3", "segre:1:4", "rnc:6", "cone:2:segre:1:2".
inline VarietyRecipe builtin_recipe(const std::string &name) {
  if (const CatalogEntry *e = catalog_find(name))
    return e->recipe;
  auto split = [](const std::string &s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t colon = s.find(':', start);
      if (colon == std::string::npos) {
        parts.push_back(s.substr(start));
        break;
      }
      parts.push_back(s.substr(start, colon - start));
      start = colon + 1;
    }
    return parts;
  };
  std::vector<std::string> parts = split(name);
  auto nat = [&](const std::string &s) -> long long {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error("builtin: bad numeric argument '" + s + "' in " + name);
    return std::stoll(s);
  };
  if (parts.size() == 3 && parts[0] == "veronese") {
    long long n = nat(parts[1]), d = nat(parts[2]);
    return make_recipe([n, d](auto f) { return veronese(f, n, d); });
  }
  if (parts.size() == 3 && parts[0] == "segre") {
    long long a = nat(parts[1]), b = nat(parts[2]);
    return make_recipe([a, b](auto f) { return segre(f, a, b); });
  }
  if (parts.size() == 2 && parts[0] == "rnc") {
    long long d = nat(parts[1]);
    return make_recipe([d](auto f) { return rational_normal_curve(f, d); });
  }
  if (parts.size() == 3 && parts[0] == "linear") {
    long long n = nat(parts[1]), r = nat(parts[2]);
    return make_recipe([n, r](auto f) { return linear_chart(f, n, r); });
  }
  if (parts.size() >= 3 && parts[0] == "cone") {
    long long k = nat(parts[1]);
    std::string rest =
        name.substr(std::string("cone:").size() + parts[1].size() + 1);
    VarietyRecipe base = builtin_recipe(rest);
    VarietyRecipe out;
    out.build_fp = [base, k](const FpField &f) {
      return cone_over(base.build_fp(f), k);
    };
    out.build_rat = [base, k](const RatField &f) {
      return cone_over(base.build_rat(f), k);
    };
    return out;
  }
  throw Error("unknown builtin '" + name + "'");
}

} // namespace terracini

#endif // TERRACINI_CATALOG_HPP
