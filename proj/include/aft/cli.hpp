#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aft::cli {

// Exit statuses. kPropertyViolated is only ever returned when a theorem check
// fails; bad input and usage errors are kUsageError.
inline constexpr int kOk = 0;
inline constexpr int kPropertyViolated = 1;
inline constexpr int kUsageError = 2;

int cmd_check(const std::string& path, std::ostream& out);
int cmd_special_leaf(const std::string& path, long long root,
                     std::ostream& out);
int cmd_reduce(const std::string& path, std::optional<std::uint64_t> seed,
               std::ostream& out);
int cmd_enumerate(long long n, bool asymmetric, bool count_only,
                  std::ostream& out);
int cmd_verify(long long n_max, std::ostream& out);
int cmd_hasse(long long n_max, const std::string& dot_path,
              const std::string& tsv_path, std::ostream& out);

// Parses args (without the program name) and dispatches. The cmd_* functions
// throw TreeError on bad input; run() reports it on err and maps it to
// kUsageError, or kPropertyViolated for kStuckNotAtE7.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace aft::cli
