#pragma once

/* Shared memo for pass/fail verdicts, keyed by bundle content.  Synchronized;
 * callers never observe partial state. */

#include <functional>
#include <string>

namespace ainfty::detail {

bool cached_verdict(const std::string& key, const std::function<bool()>& compute);
void store_verdict(const std::string& key, bool verdict);

}  // namespace ainfty::detail
