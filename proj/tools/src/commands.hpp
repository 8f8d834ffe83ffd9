#ifndef MOCA_KIT_COMMANDS_HPP
#define MOCA_KIT_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mocakit {

// Shared flags; per-command options live in the command structs below.
struct GlobalOptions {
  std::uint64_t seed = 0;
  bool json = false;
  unsigned threads = 1;
  std::optional<std::string> out_path;
};

int run_latin(const GlobalOptions& opt, const std::string& rule_arg);
int run_orthogonal(const GlobalOptions& opt, const std::string& rule_a,
                   const std::string& rule_b, const std::string& pair_path);
int run_enumerate_linear(const GlobalOptions& opt, std::uint32_t q, unsigned n, bool count_only);
int run_max_family(const GlobalOptions& opt, std::uint32_t q, unsigned n, bool size_only);
int run_search_nonlinear(const GlobalOptions& opt, unsigned d, bool nonlinear_only,
                         bool dedup_unordered, bool confirm_long,
                         const std::string& checkpoint_path);
int run_sss_deal(const GlobalOptions& opt, const std::string& family_path, std::uint64_t secret,
                 std::optional<std::uint64_t> randomness);
int run_sss_reconstruct(const GlobalOptions& opt, const std::string& family_path,
                        const std::vector<std::string>& share_args, const std::string& method);
int run_sss_audit(const GlobalOptions& opt, const std::string& family_path,
                  std::optional<unsigned> player);
int run_prng_stream(const GlobalOptions& opt, const std::string& pair_path,
                    const std::string& seed_hex, std::uint64_t bits);
int run_prng_cycles(const GlobalOptions& opt, const std::string& pair_path);
int run_prng_report(const GlobalOptions& opt, const std::string& pair_path);
int run_bent(const GlobalOptions& opt, const std::string& family_path);
int run_ci(const GlobalOptions& opt, const std::string& family_path, bool entries_only,
           unsigned t_max);
int run_oa_strength(const GlobalOptions& opt, const std::string& family_path,
                    const std::string& in_path, bool binary, unsigned t_max);

}  // namespace mocakit

#endif
