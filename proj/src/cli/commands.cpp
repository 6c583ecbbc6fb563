#include "goursat/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "goursat/classify.hpp"
#include "goursat/expr.hpp"
#include "goursat/oracle.hpp"
#include "goursat/pair.hpp"

namespace goursat::cli {

namespace {

template <typename F>
Result guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {kUsageError, "", std::string("parse error ") + e.what()};
  } catch (const CapExceeded& e) {
    return {kCapExceeded, "", std::string("cap exceeded: ") + e.what()};
  } catch (const TheoremViolation& e) {
    return {kVerificationFailed, "", std::string("verification failed: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {kUsageError, "", std::string("invalid input: ") + e.what()};
  } catch (const std::out_of_range& e) {
    return {kUsageError, "", std::string("invalid input: ") + e.what()};
  }
}

DirectProduct product_for(std::string_view text, const Options& opts) {
  return build_product(parse_group_expr(text),
                       std::max(kDefaultMaxGroupOrder, opts.max_order));
}

Json factor_members(const Subgroup& h) {
  Json out = Json::array();
  for (Element x : h.members()) out.push_back(h.parent().name(x));
  return out;
}

Json product_members(const DirectProduct& d, const Subgroup& h) {
  Json out = Json::array();
  for (Element x : h.members()) out.push_back(tuple_name(d, x));
  return out;
}

std::string section_label(std::size_t j) {
  std::string s = "G(" + std::to_string(j + 1) + "|";
  for (std::size_t i = 0; i < j; ++i) s += (i > 0 ? "," : "") + std::to_string(i + 1);
  return s + ")";
}

Json subgroup_json(const DirectProduct& d, const Subgroup& g, std::span<const Element> gens) {
  Json gen_names = Json::array();
  for (Element x : gens) gen_names.push_back(tuple_name(d, x));
  Json out;
  out["order"] = g.order();
  out["generators"] = std::move(gen_names);
  out["members"] = product_members(d, g);
  return out;
}

std::vector<std::size_t> primes_dividing(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p == 0 && is_prime(p)) out.push_back(p);
  }
  return out;
}

Result json_result(const Json& j, int code = kOk) { return {code, j.dump(2), ""}; }

}  // namespace

Json chain_to_json(const DirectProduct& d, const GoursatChain& chain) {
  Json out;
  out["factors"] = chain.arity();
  out["components"] = chain.component_count();
  out["g1bar"] = factor_members(chain.g1bar);
  Json links = Json::array();
  for (std::size_t j = 1; j <= chain.links.size(); ++j) {
    const ChainLink& link = chain.links[j - 1];
    const DirectProduct prefix = d.prefix(j);
    Json theta = Json::array();
    const auto dom = link.theta.domain().members();
    const auto img = link.theta.images();
    for (std::size_t i = 0; i < dom.size(); ++i) {
      theta.push_back(Json::array(
          {tuple_name(prefix, dom[i]), link.theta.codomain().parent().name(img[i])}));
    }
    Json l;
    l["factor"] = j + 1;
    l["gbar"] = factor_members(link.gbar);
    l["rel"] = factor_members(link.rel);
    l["rel_section"] = section_label(j);
    l["theta"] = std::move(theta);
    links.push_back(std::move(l));
  }
  out["links"] = std::move(links);
  return out;
}

Result run_enumerate(std::string_view expr, const Options& opts) {
  return guarded([&] {
    const DirectProduct d = product_for(expr, opts);
    const std::vector<Subgroup> subs = enumerate_subgroups_n(d, opts.max_order);
    Json list = Json::array();
    bool roundtrip = true;
    for (const Subgroup& g : subs) {
      const GoursatChain chain = qn(d, g);
      if (opts.verify) roundtrip = roundtrip && gamman(d, chain) == g;
      Json s;
      s["order"] = g.order();
      s["members"] = product_members(d, g);
      s["chain"] = chain_to_json(d, chain);
      s["is_cyclic"] = cyclic_criterion(d, g).is_cyclic;
      list.push_back(std::move(s));
    }
    Json out;
    out["group"] = d.group()->label();
    out["order"] = d.order();
    out["subgroup_count"] = subs.size();
    out["subgroups"] = std::move(list);
    int code = kOk;
    if (opts.verify) {
      const bool verified = roundtrip && oracle::all_subgroups_bruteforce(d.group(), opts.max_order) == subs;
      out["verified"] = verified;
      if (!verified) code = kVerificationFailed;
    }
    return json_result(out, code);
  });
}

Result run_decompose(std::string_view expr, std::string_view gens, const Options& opts) {
  return guarded([&] {
    const DirectProduct d = product_for(expr, opts);
    const std::vector<Element> generators = parse_generators(d, gens);
    const Subgroup g = generated_subgroup(d.group(), generators);
    const GoursatChain chain = qn(d, g);
    const bool matches = gamman(d, chain) == g;
    Json out;
    out["group"] = d.group()->label();
    out["order"] = d.order();
    out["subgroup"] = subgroup_json(d, g, generators);
    out["chain"] = chain_to_json(d, chain);
    out["reconstruction_matches"] = matches;
    return json_result(out, matches ? kOk : kVerificationFailed);
  });
}

Result run_classify(std::string_view expr, std::string_view gens, const Options& opts) {
  return guarded([&] {
    const DirectProduct d = product_for(expr, opts);
    const std::vector<Element> generators = parse_generators(d, gens);
    const Subgroup g = generated_subgroup(d.group(), generators);
    const CyclicVerdict verdict = cyclic_criterion(d, g);
    Json p_groups = Json::array();
    for (std::size_t p : primes_dividing(d.order())) {
      if (is_p_group_via_projections(d, g, p)) p_groups.push_back(p);
    }
    Json out;
    out["group"] = d.group()->label();
    out["subgroup"] = subgroup_json(d, g, generators);
    out["cyclic"] = verdict.is_cyclic;
    if (verdict.predicted_order) out["predicted_order"] = *verdict.predicted_order;
    out["direct_order"] = g.order();
    out["abelian"] = is_abelian_via_projections(d, g);
    out["p_group_for"] = std::move(p_groups);
    out["product_of_projections"] = is_product_of_projections(d, g);
    return json_result(out);
  });
}

Result run_lattice(std::string_view expr, bool dot, const Options& opts) {
  return guarded([&] {
    const DirectProduct d = product_for(expr, opts);
    const std::vector<Subgroup> subs = enumerate_subgroups_n(d, opts.max_order);
    const std::size_t n = subs.size();
    std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        below[u][v] = u != v && subs[u].order() < subs[v].order() && subs[u].is_subset_of(subs[v]);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!below[u][v]) continue;
        bool covers = true;
        for (std::size_t w = 0; w < n && covers; ++w) covers = !(below[u][w] && below[w][v]);
        if (covers) edges.emplace_back(u, v);
      }
    }

    if (dot) {
      std::ostringstream os;
      os << "digraph subgroup_lattice {\n";
      os << "  label=\"" << d.group()->label() << "\";\n";
      for (std::size_t i = 0; i < n; ++i) {
        os << "  n" << i << " [label=\"order=" << subs[i].order() << ", idx=" << i << "\"];\n";
      }
      for (const auto& [u, v] : edges) os << "  n" << u << " -> n" << v << ";\n";
      os << "}";
      return Result{kOk, os.str(), ""};
    }
    Json nodes = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json node;
      node["idx"] = i;
      node["order"] = subs[i].order();
      node["members"] = product_members(d, subs[i]);
      nodes.push_back(std::move(node));
    }
    Json edge_list = Json::array();
    for (const auto& [u, v] : edges) edge_list.push_back(Json::array({u, v}));
    Json out;
    out["group"] = d.group()->label();
    out["nodes"] = std::move(nodes);
    out["edges"] = std::move(edge_list);
    return json_result(out);
  });
}

Result run_verify(std::string_view expr, const Options& opts) {
  return guarded([&] {
    const DirectProduct d = product_for(expr, opts);
    const std::vector<Subgroup> goursat = enumerate_subgroups_n(d, opts.max_order);
    const std::vector<Subgroup> brute = oracle::all_subgroups_bruteforce(d.group(), opts.max_order);
    bool roundtrip = true;
    bool criterion = true;
    bool quotients = true;
    for (const Subgroup& g : brute) {
      const GoursatChain chain = qn(d, g);
      roundtrip = roundtrip && gamman(d, chain) == g && qn(d, gamman(d, chain)) == chain;
      criterion = criterion && cyclic_criterion(d, g).is_cyclic == is_cyclic_direct(g);
      if (d.arity() == 2) quotients = quotients && quotient_condition_check(d, g);
    }
    const bool sets_equal = goursat == brute;
    Json out;
    out["group"] = d.group()->label();
    out["order"] = d.order();
    out["goursat_count"] = goursat.size();
    out["oracle_count"] = brute.size();
    out["sets_equal"] = sets_equal;
    out["roundtrip"] = roundtrip;
    out["cyclic_criterion"] = criterion;
    if (d.arity() == 2) out["quotient_condition"] = quotients;
    const bool verified = sets_equal && roundtrip && criterion && quotients;
    out["verified"] = verified;
    return json_result(out, verified ? kOk : kVerificationFailed);
  });
}

std::size_t max_order_from_env() {
  const char* raw = std::getenv("GOURSAT_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return 0;
  return static_cast<std::size_t>(v);
}

}  // namespace goursat::cli
