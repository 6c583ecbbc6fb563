#pragma once

#include <string>
#include <string_view>

#include "goursat/chain.hpp"
#include "goursat/error.hpp"
#include "goursat/product.hpp"
#include "json.hpp"

namespace goursat::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kVerificationFailed = 2,
  kCapExceeded = 3,
};

struct Options {
  /// Cap on the product order for subgroup enumeration. Group construction is
  /// capped at max(kDefaultMaxGroupOrder, max_order).
  std::size_t max_order = kDefaultMaxEnumerationOrder;
  bool verify = false;
};

/// `output` goes to stdout (with a trailing newline), `error` to stderr.
struct Result {
  int exit_code = kOk;
  std::string output;
  std::string error;
};

Result run_enumerate(std::string_view expr, const Options& opts);
Result run_decompose(std::string_view expr, std::string_view gens, const Options& opts);
Result run_classify(std::string_view expr, std::string_view gens, const Options& opts);
Result run_lattice(std::string_view expr, bool dot, const Options& opts);
Result run_verify(std::string_view expr, const Options& opts);

/// Serialized chain: factor count, component count, g1bar, and per link the
/// factor subgroups by element name and theta as [domain tuple, image coset]
/// pairs.
Json chain_to_json(const DirectProduct& d, const GoursatChain& chain);

/// Value of GOURSAT_MAX_ORDER, or 0 when unset or malformed.
std::size_t max_order_from_env();

}  // namespace goursat::cli
