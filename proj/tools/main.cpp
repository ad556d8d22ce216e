#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "toroidal/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Equivariant toroidal resolution of conical complexes"};
  app.require_subcommand(1);

  std::string input, output, center, mode = "canonical", certificate;

  auto* validate = app.add_subcommand("validate", "Check a fan file (and its group action)");
  validate->add_option("input", input, "fan file")->required();

  auto* barycentric = app.add_subcommand("barycentric", "Write the barycentric subdivision");
  barycentric->add_option("input", input, "fan file")->required();
  barycentric->add_option("-o,--output", output, "output fan file (default: stdout)");

  auto* star = app.add_subcommand("star", "Write the star subdivision at a lattice point");
  star->add_option("input", input, "fan file")->required();
  star->add_option("--center", center, "center coordinates, e.g. \"1 1\"")->required();
  star->add_option("-o,--output", output, "output fan file (default: stdout)");

  auto* resolve = app.add_subcommand("resolve", "Resolve and write a certificate");
  resolve->add_option("input", input, "fan file")->required();
  resolve->add_option("--mode", mode, "canonical or plain")->check(CLI::IsMember({"canonical", "plain"}));
  resolve->add_option("-o,--output", output, "certificate file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Re-verify a certificate against its input");
  verify->add_option("certificate", certificate, "certificate file")->required();
  verify->add_option("input", input, "fan file")->required();

  auto* orbits = app.add_subcommand("orbits", "Orbit structure of the group action (JSON)");
  orbits->add_option("input", input, "fan file")->required();

  auto* report = app.add_subcommand("report", "Summary of a fan file (JSON)");
  report->add_option("input", input, "fan file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*validate) return toroidal::cmd_validate(input, out, err);
  if (*barycentric) return toroidal::cmd_barycentric(input, output, out, err);
  if (*star) return toroidal::cmd_star(input, center, output, out, err);
  if (*resolve) return toroidal::cmd_resolve(input, mode, output, out, err);
  if (*verify) return toroidal::cmd_verify(certificate, input, out, err);
  if (*orbits) return toroidal::cmd_orbits(input, out, err);
  if (*report) return toroidal::cmd_report(input, out, err);
  return 2;
}
