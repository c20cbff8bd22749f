#pragma once

// Command-line front end. Parsing, report rendering and output are kept
// apart so tests can drive each step directly.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "egc/errors.hpp"
#include "egc/exactmath.hpp"
#include "egc/reference.hpp"

namespace egc::cli {

enum class Command { kDelta, kApprox, kTheorem, kIdentities, kConjecture };
enum class Format { kText, kCsv, kJson };
enum class ConventionChoice { kMinus, kPlus, kBoth };

inline constexpr int kMinDigits = 10;
inline constexpr int kMaxDigits = PrecisionContext::kMaxDigits;
inline constexpr long kMaxRows = 200;

struct CommandConfig {
  Command command = Command::kDelta;
  int digits = 30;
  Format format = Format::kText;
  std::optional<std::string> out_path;
  int threads = 0;  // 0 leaves the OpenMP default alone

  // delta
  DeltaMethod method = DeltaMethod::kCrossValidated;
  // approx
  int corollary = 1;
  // approx, theorem
  std::optional<long> r;
  // approx, theorem, identities, conjecture
  std::optional<long> max_m;
  // theorem, conjecture
  BigRat u = 1;
  bool quadrature_only = false;
  // identities
  long max_m_binformula2 = 20;
  long max_m_gauss = 15;
  long max_r = 3;
  bool exact_only = false;
  bool corrupt = false;
  // conjecture
  ConventionChoice convention = ConventionChoice::kBoth;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Report {
  int exit_code = 0;
  std::string text;
};

// Throws UsageError. Returns nullopt after printing --help to `out`.
std::optional<CommandConfig> parse_args(const std::vector<std::string>& args,
                                        std::ostream& out);

// Range checks that parse_args cannot express per flag. Throws UsageError.
void validate(const CommandConfig& config);

// Computes and renders the report. Library errors propagate.
Report render(const CommandConfig& config);

// Writes `text` to `path` through a temporary file in the same directory.
void write_atomically(const std::string& path, const std::string& text);

// validate + render + emit, mapping errors to exit codes 1 and 2.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// Full entry point used by the executable; args exclude the program name.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace egc::cli
