#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <unistd.h>

#include "doctest.h"
#include "qauth/serialize.hpp"

using namespace qauth;
using namespace qauth::serialize;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qauth_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("family files round trip and detect corruption") {
  TempDir tmp;
  const auto family = ptcodes::build_family(2, 2);
  const fs::path file = tmp.path / "fam.json";
  save_family(family, file);

  const auto loaded = load_family(file);
  CHECK(loaded.r == 2);
  CHECK(loaded.s == 2);
  CHECK(loaded.tower == family.tower);
  for (int k = 0; k < family.code_count(); ++k) {
    CHECK(loaded.codes[k].gen_rows == family.codes[k].gen_rows);
    CHECK(loaded.codes[k].completion.destabilizers == family.codes[k].completion.destabilizers);
  }

  // flip one character inside the payload: checksum must catch it
  std::string text = read_text_file(file);
  const auto pos = text.find("\"basis\"");
  REQUIRE(pos != std::string::npos);
  const auto digit = text.find_first_of("0123456789abcdef", text.find("0x", pos) + 2);
  text[digit] = text[digit] == '1' ? '2' : '1';
  const fs::path bad = tmp.path / "bad.json";
  write_text_file(bad, text);
  CHECK_THROWS_AS(load_family(bad), std::invalid_argument);

  // non-JSON content: parse error
  write_text_file(bad, "not json at all");
  CHECK_THROWS_AS(load_family(bad), std::invalid_argument);
}

TEST_CASE("key files") {
  TempDir tmp;
  const auto family = ptcodes::build_family(2, 2);
  const auto key = authproto::keygen(99, family);
  const fs::path file = tmp.path / "key.json";
  save_key(key, family, file);
  CHECK(load_key(file, family) == key);

  // a key for other parameters is refused
  const auto other = ptcodes::build_family(2, 1);
  CHECK_THROWS_AS(load_key(file, other), std::invalid_argument);

  // hand-made key with out-of-range syndrome bits
  nlohmann::json j = key_to_json(key, family);
  j["y"] = "0xff";
  write_text_file(file, j.dump());
  CHECK_THROWS_AS(load_key(file, family), std::invalid_argument);
}

TEST_CASE("envelopes round trip bit-exactly") {
  TempDir tmp;
  const auto family = ptcodes::build_family(2, 1);
  const authproto::SchemeDense scheme(family);
  const auto key = authproto::keygen(5, family);

  Envelope env;
  env.r = family.r;
  env.s = family.s;
  env.pad = 0;
  env.key_commitment = key_commitment(key, family);
  env.payload = authproto::auth_encode(scheme, key, Eigen::VectorXcd::Unit(2, 1));

  const fs::path file = tmp.path / "msg.qa";
  save_envelope(env, file);
  const Envelope back = load_envelope(file);
  CHECK(back.r == env.r);
  CHECK(back.s == env.s);
  CHECK(back.pad == 0);
  CHECK(back.key_commitment == env.key_commitment);
  REQUIRE(back.payload.size() == env.payload.size());
  for (Eigen::Index i = 0; i < env.payload.size(); ++i) {
    CHECK(back.payload[i] == env.payload[i]);  // bit-exact doubles
  }

  // commitments differ across keys
  const auto key2 = authproto::keygen(6, family);
  CHECK(key_commitment(key2, family) != env.key_commitment);

  // truncated file
  std::string raw = read_text_file(file);
  write_text_file(file, raw.substr(0, raw.size() / 2));
  CHECK_THROWS(load_envelope(file));
}

TEST_CASE("density export shapes") {
  TempDir tmp;
  const auto rho = dense::DensityMatrix::maximally_mixed(4);
  const auto j = density_to_json(rho);
  CHECK(j.at("dim") == 4);
  CHECK(j.at("entries").size() == 4);
  CHECK_THROWS_AS(density_to_json(dense::DensityMatrix::maximally_mixed(16)),
                  std::invalid_argument);
  const fs::path file = tmp.path / "rho.bin";
  save_density_binary(rho, file);
  CHECK(fs::file_size(file) == 4 + 4 * 4 * 16);  // u32 dim + dim^2 complex doubles
}

TEST_CASE("fnv checksum is stable") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") != fnv1a64("b"));
}
