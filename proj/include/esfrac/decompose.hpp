#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esfrac/egyptian.hpp"

namespace esfrac::decompose {

/// Cascade for k = 4: tries registry families in the documented priority order
///   F31 (n === 3 mod 4), F32.1/.6/.2/.3/.5 (mod 8 / mod 24 classes),
///   F43, F21 (even n, the 2/l split), F49.1/.2, F50 (8t+1 with a small b
///   search), F45 (4t+1 ladder), F13 (distributive v/alpha/beta search),
///   F48.5 (24t+1), then the three-term oracle.
/// Always returns a verified record for n >= 2 when k = 4. For other k it
/// tries the generic F31 match and falls back to the oracle (requires k/n <= 3).
DecompRecord cascade(const Integer& k, const Integer& n);

/// Evaluate one family entry against n by searching a small parameter window;
/// nullopt when the entry has no binding for this n within the window.
std::optional<DecompRecord> match_family(const std::string& entry_id, const Integer& k,
                                         const Integer& n);

/// Strategy dispatcher: "cascade", "oracle", or "family:<entry-id>".
std::vector<DecompRecord> decompose(const Integer& k, const Integer& n, const std::string& strategy,
                                    bool all);

}  // namespace esfrac::decompose
