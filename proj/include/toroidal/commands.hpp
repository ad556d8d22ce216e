#pragma once

#include <iosfwd>
#include <string>

// Command implementations behind the toroidal executable. Each returns the
// process exit code: 0 success, 1 semantic failure, 2 parse failure. An empty
// output path writes to `out`.

namespace toroidal {

std::size_t group_cap_from_environment();

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_barycentric(const std::string& path, const std::string& output, std::ostream& out, std::ostream& err);
int cmd_star(const std::string& path, const std::string& center, const std::string& output, std::ostream& out,
             std::ostream& err);
int cmd_resolve(const std::string& path, const std::string& mode, const std::string& output, std::ostream& out,
                std::ostream& err);
int cmd_verify(const std::string& certificate_path, const std::string& input_path, std::ostream& out,
               std::ostream& err);
int cmd_orbits(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_report(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace toroidal
