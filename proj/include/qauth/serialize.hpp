#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qauth/authproto.hpp"
#include "qauth/dense.hpp"
#include "qauth/ptcodes.hpp"

namespace qauth::serialize {

using json = nlohmann::json;

/// FNV-1a 64-bit, used as the integrity checksum on family files and the
/// key commitment carried by envelopes.
std::uint64_t fnv1a64(std::string_view data);

json tower_to_json(const gf2e::TowerDesc& desc);
gf2e::TowerDesc tower_from_json(const json& j);

/// Family file: moduli, epsilon bound, per-code RREF basis and completion
/// rows as hex, plus a checksum over the content. Loading verifies the
/// checksum and the recomputed completions; both failures throw.
json family_to_json(const ptcodes::PurityTestingFamily& family);
ptcodes::PurityTestingFamily family_from_json(const json& j);

void save_family(const ptcodes::PurityTestingFamily& family, const std::filesystem::path& path);
ptcodes::PurityTestingFamily load_family(const std::filesystem::path& path);

/// Key file: {k, x-hex, y-hex} plus the family parameters it belongs to.
json key_to_json(const authproto::AuthKey& key, const ptcodes::PurityTestingFamily& family);
authproto::AuthKey key_from_json(const json& j, const ptcodes::PurityTestingFamily& family);

void save_key(const authproto::AuthKey& key, const ptcodes::PurityTestingFamily& family,
              const std::filesystem::path& path);
authproto::AuthKey load_key(const std::filesystem::path& path,
                            const ptcodes::PurityTestingFamily& family);

/// Wire envelope: "QAUTHENV1\n", a little-endian u32 header length, the
/// header JSON {r, s, n, pad, seed_commitment}, then the 2^n amplitudes as
/// little-endian doubles interleaved (re, im), amplitude index = basis index.
struct Envelope {
  int r = 0;
  int s = 0;
  int pad = 0;  // zero-state qubits appended to reach m
  std::uint64_t key_commitment = 0;
  Eigen::VectorXcd payload;
};

void save_envelope(const Envelope& env, const std::filesystem::path& path);
Envelope load_envelope(const std::filesystem::path& path);

/// Commitment binding an envelope to a key file (over its canonical JSON).
std::uint64_t key_commitment(const authproto::AuthKey& key,
                             const ptcodes::PurityTestingFamily& family);

/// Density matrix export: row-major interleaved doubles, little-endian.
void save_density_binary(const dense::DensityMatrix& rho, const std::filesystem::path& path);
json density_to_json(const dense::DensityMatrix& rho);  // dim <= 8 only

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace qauth::serialize
