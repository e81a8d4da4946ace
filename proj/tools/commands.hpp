#ifndef CYCERT_TOOLS_COMMANDS_HPP
#define CYCERT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cycert::cli {

// Exit codes: 0 pass, 1 verification failure, 2 usage/domain error.
int cmd_unit(std::uint64_t p, std::ostream& out);
int cmd_search(std::uint64_t p, const std::vector<std::uint64_t>& qs,
               bool emit_tables, std::uint64_t scan_bound, std::ostream& out);
int cmd_certify(std::uint64_t p, long long m0, long long n0, std::uint64_t q,
                const std::string& out_file, std::ostream& out);
int cmd_verify(std::uint64_t p, const std::string& suite, std::ostream& out);
int cmd_disc(std::uint64_t p, long long m, long long n, std::ostream& out);

}  // namespace cycert::cli

#endif
