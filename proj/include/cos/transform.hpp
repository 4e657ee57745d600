#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cos/derivation.hpp"

namespace deep {

struct PassReport {
  std::string pass;
  std::size_t input_steps = 0;
  std::size_t output_steps = 0;
  std::size_t rewritten = 0;  // rule instances replaced or removed
  bool postcheck_ok = false;
};

class TransformError : public std::runtime_error {
 public:
  enum class Kind { InputInvalid, PreconditionViolated, PostcheckFailed };

  TransformError(Kind kind, std::string which, std::size_t step, const std::string& message)
      : std::runtime_error(message), kind_(kind), which_(std::move(which)), step_(step) {}

  Kind kind() const { return kind_; }
  /// Which input the error refers to ("input", "first", "second", "output").
  const std::string& which() const { return which_; }
  std::size_t step() const { return step_; }

 private:
  Kind kind_;
  std::string which_;
  std::size_t step_;
};

/// Replaces every w-up instance S{R} / S{t} by s, w-down, i-up through
/// S[t,(R,f)] and S[t,(R,-R)].
Derivation eliminate_w_up(const Derivation& d, PassReport* report = nullptr);

/// Reduces every i-up instance to ai-up instances by the switch recursion.
Derivation atomize_cut(const Derivation& d, PassReport* report = nullptr);

/// Reduces every i-down instance to ai-down instances (the dual recursion).
Derivation atomize_identity(const Derivation& d, PassReport* report = nullptr);

/// For proofs without i-up and w-up: removes every atomic cut whose atom does
/// not occur in its context and relabels the remaining ones fai-up.
Derivation finitarize(const Derivation& p, PassReport* report = nullptr);

/// Derivation from -conclusion(d) to -premise(d) by the corules, bottom-up.
Derivation flip(const Derivation& d, PassReport* report = nullptr);

/// flip() without checking input or output.
Derivation flip_unchecked(const Derivation& d);

inline constexpr std::string_view kPassNames[] = {"wup-elim", "atomize-cut", "atomize-id",
                                                  "finitarize", "flip"};

/// Runs a pass by its command-line name; nullopt for an unknown name.
std::optional<Derivation> run_pass(std::string_view name, const Derivation& d,
                                   PassReport* report = nullptr);

struct PipelineStage {
  std::string name;
  std::size_t steps;  // length of the derivation built so far
  std::string detail;
};

struct ConsistencyReport {
  std::vector<PipelineStage> stages;
  Derivation candidate;            // t down to f, assembled from the inputs
  bool candidate_checks = false;   // under the validator the pipeline ran with
  bool kernel_accepts = false;     // under the kernel's own validator
  /// A checking proof of f came out: some step checker is unsound.
  bool soundness_alarm() const { return candidate_checks || kernel_accepts; }
};

/// From proofs of R and -R: conjoin them into t / (R,-R), flip that into
/// [-R,R] / f, prepend the identity t / [-R,R] atomized, and check the result.
/// Throws TransformError(InputInvalid) naming the first input that fails.
ConsistencyReport consistency_pipeline(const Derivation& p1, const Derivation& p2,
                                       const StepValidator& validator = kernel_validator());

}  // namespace deep
