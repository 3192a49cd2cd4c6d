#pragma once
// The structural verification suite: one machine-checkable item per
// catalogued statement (thm*/lemma*/cor*/prop*/fact*/claim*) and per numbered
// matrix identity (eq*). Every check is exact arithmetic over Q(zeta_n);
// an item reports pass/fail plus a short factual detail line.
//
// Item ids mirror the catalogued numbering: thm1..thm14 (multi-part theorems
// expose sub-items like thm1.order), lemma1..lemma16, cor1..cor7,
// prop1..prop6, fact1..fact2, claim1, eq1..eq62 and eq67..eq75. The four ids
// eq63..eq66 name external database lookups rather than matrix computations
// and are deliberately absent; selecting them is a usage error.

#include <functional>
#include <string>
#include <vector>

namespace su3kit::verify {

struct ItemResult {
  bool ok = false;
  std::string detail;
};

struct Item {
  std::string id;
  std::function<ItemResult()> run;
};

// The full registry in fixed report order. Heavy shared state (group
// closures, Sylow lists, multiplication tables) is memoized process-wide, so
// items stay cheap to re-run and small selections never pay for the rest.
const std::vector<Item>& all_items();

// Items matching a selector: "all", an exact id ("eq21"), or a dotted-prefix
// family ("thm1" selects thm1.order, thm1.presentation, ...; it does not
// match thm14.*). Throws usage_error when nothing matches.
std::vector<const Item*> select_items(const std::string& selector);

}  // namespace su3kit::verify
