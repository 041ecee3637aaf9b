#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "krein/core.hpp"

#include "krein/ensemble.hpp"
#include "krein/instance_io.hpp"

namespace {

#ifndef KREINSPEC_BIN
#error "KREINSPEC_BIN must point at the CLI binary"
#endif

std::string bin() { return KREINSPEC_BIN; }

int run(const std::string& args) {
  const std::string command = bin() + " " + args + " > /dev/null 2> /dev/null";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/kreinspec_test_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("examples subcommand passes and honours the tolerance flag") {
  CHECK(run("examples") == 0);
  CHECK(run("examples --json") == 0);
  // An impossible tolerance flips the exit code to the violation value.
  CHECK(run("examples --tol 1e-22") == 1);
}

TEST_CASE("analyze succeeds on a sharp instance file") {
  const std::string path = temp_path("two_by_one.json");
  krein::save_instance(krein::golden_two_by_one(4.0, 1.0), path);
  CHECK(run("analyze " + path) == 0);
  CHECK(run("analyze " + path + " --format json") == 0);
  std::remove(path.c_str());
}

TEST_CASE("analyze exits 2 on malformed input") {
  const std::string path = temp_path("broken.json");
  std::ofstream(path) << "{ this is not json";
  CHECK(run("analyze " + path) == 2);
  std::remove(path.c_str());
  CHECK(run("analyze /nonexistent/instance.json") == 2);
}

TEST_CASE("analyze exits 3 when the spectrum leaves the real axis") {
  // a0 = -1/2, a1 = 1/2, b = 0.8: eigenvalues +/- i sqrt(0.39).
  const std::string path = temp_path("nonreal.json");
  krein::save_instance(krein::golden_scalar(1.0, 0.8), path);
  CHECK(run("analyze " + path) == 3);
  std::remove(path.c_str());
}

TEST_CASE("ensemble is byte-identical under a fixed seed") {
  const std::string out1 = temp_path("ens1.csv");
  const std::string out2 = temp_path("ens2.csv");
  const std::string flags =
      " --trials 12 --dims 3,3 --v-over-d 0.25 --disposition gap --seed 42 --out ";
  CHECK(run("ensemble" + flags + out1) == 0);
  CHECK(run("ensemble" + flags + out2) == 0);
  const std::string first = slurp(out1);
  CHECK(!first.empty());
  CHECK(first == slurp(out2));
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("ensemble rejects out-of-range ratios") {
  CHECK(run("ensemble --trials 1 --v-over-d 0.4 --disposition gap") == 2);
  CHECK(run("ensemble --trials 1 --v-over-d 0.4 --disposition gap --allow-gap-only") == 0);
  CHECK(run("ensemble --trials 1 --v-over-d 0.4 --disposition generic --allow-gap-only") == 2);
}

TEST_CASE("qnr writes a point cloud and checks the half-plane bound") {
  const std::string inst = temp_path("scalar.json");
  const std::string out = temp_path("qnr.csv");
  krein::save_instance(krein::golden_scalar(2.0, 0.6), inst);
  CHECK(run("qnr " + inst + " --samples 200 --seed 3 --out " + out) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("re,im,source", 0) == 0);
  CHECK(csv.find(",spectrum") != std::string::npos);
  std::remove(inst.c_str());
  std::remove(out.c_str());
}

TEST_CASE("qnr skips the half-plane check in general mode") {
  const std::string path = temp_path("general.json");
  const auto inst = krein::build_instance(
      krein::Matrix::Constant(1, 1, krein::Complex(0.0)),
      krein::Matrix::Constant(1, 1, krein::Complex(1.0)),
      krein::Matrix::Constant(1, 1, krein::Complex(0.1)),
      krein::Matrix(krein::Matrix::Constant(1, 1, krein::Complex(0.2))), krein::Mode::General);
  krein::save_instance(inst, path);
  CHECK(run("qnr " + path + " --samples 50") == 0);
  std::remove(path.c_str());
}

TEST_CASE("oscillator subcommand passes at beta = 0.2") {
  CHECK(run("oscillator --beta 0.2 --m 16") == 0);
}

} // TEST_SUITE("cli")
