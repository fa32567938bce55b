#include "qauth/serialize.hpp"

#include <cstring>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace qauth::serialize {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

std::uint64_t parse_hex64(const std::string& s) {
  std::size_t pos = 0;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) pos = 2;
  if (pos >= s.size()) throw std::invalid_argument("parse_hex64: empty string");
  std::uint64_t v = 0;
  for (std::size_t i = pos; i < s.size(); ++i) {
    const char c = s[i];
    std::uint64_t d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      d = c - 'A' + 10;
    else
      throw std::invalid_argument("parse_hex64: bad hex digit");
    v = (v << 4) | d;
  }
  return v;
}

json rows_to_json(const std::vector<std::uint64_t>& rows) {
  json arr = json::array();
  for (std::uint64_t r : rows) arr.push_back(hex64(r));
  return arr;
}

std::vector<std::uint64_t> rows_from_json(const json& arr) {
  std::vector<std::uint64_t> rows;
  for (const auto& v : arr) rows.push_back(parse_hex64(v.get<std::string>()));
  return rows;
}

}  // namespace

json tower_to_json(const gf2e::TowerDesc& desc) {
  json top = json::array();
  for (gf2e::Word c : desc.top_modulus) top.push_back(gf2e::word_to_hex(c));
  return json{{"s", desc.s},
              {"r", desc.r},
              {"moduli", {{"base", gf2e::word_to_hex(desc.base_modulus)}, {"top", top}}}};
}

gf2e::TowerDesc tower_from_json(const json& j) {
  gf2e::TowerDesc desc;
  desc.r = j.at("r").get<int>();
  desc.s = j.at("s").get<int>();
  desc.base_modulus = gf2e::word_from_hex(j.at("moduli").at("base").get<std::string>());
  for (const auto& c : j.at("moduli").at("top")) {
    desc.top_modulus.push_back(gf2e::word_from_hex(c.get<std::string>()));
  }
  return desc;
}

namespace {

json family_body_json(const ptcodes::PurityTestingFamily& family) {
  json codes = json::array();
  for (const ptcodes::CurveCode& code : family.codes) {
    json point = json::array();
    for (gf2e::Word c : code.point.coords) point.push_back(gf2e::word_to_hex(c));
    codes.push_back(json{{"k", code.point.k},
                         {"point", point},
                         {"basis", rows_to_json(code.gen_rows)},
                         {"destabilizers", rows_to_json(code.completion.destabilizers)},
                         {"logical_x", rows_to_json(code.completion.logical_x)},
                         {"logical_z", rows_to_json(code.completion.logical_z)}});
  }
  json j = tower_to_json(family.tower);
  j["format"] = "qauth-family-v1";
  j["n"] = family.n;
  j["m"] = family.m;
  j["epsilon_bound"] = family.epsilon_bound().str();
  j["codes"] = std::move(codes);
  return j;
}

}  // namespace

json family_to_json(const ptcodes::PurityTestingFamily& family) {
  json j = family_body_json(family);
  j["checksum"] = hex64(fnv1a64(j.dump()));
  return j;
}

ptcodes::PurityTestingFamily family_from_json(const json& j) {
  json body = j;
  if (!body.contains("checksum")) throw std::invalid_argument("family file: missing checksum");
  const std::uint64_t stored = parse_hex64(body.at("checksum").get<std::string>());
  body.erase("checksum");
  if (fnv1a64(body.dump()) != stored)
    throw std::invalid_argument("family file: checksum mismatch (corrupted file)");

  const gf2e::TowerDesc desc = tower_from_json(body);
  ptcodes::PurityTestingFamily family = ptcodes::build_family(desc.r, desc.s);
  if (family.tower != desc)
    throw std::invalid_argument("family file: moduli do not match the canonical tower");

  const json& codes = body.at("codes");
  if (codes.size() != family.codes.size())
    throw std::invalid_argument("family file: wrong code count");
  for (std::size_t i = 0; i < family.codes.size(); ++i) {
    const ptcodes::CurveCode& code = family.codes[i];
    if (codes[i].at("k").get<int>() != code.point.k ||
        rows_from_json(codes[i].at("basis")) != code.gen_rows ||
        rows_from_json(codes[i].at("destabilizers")) != code.completion.destabilizers ||
        rows_from_json(codes[i].at("logical_x")) != code.completion.logical_x ||
        rows_from_json(codes[i].at("logical_z")) != code.completion.logical_z) {
      throw std::invalid_argument("family file: stored code disagrees with reconstruction");
    }
  }
  return family;
}

void save_family(const ptcodes::PurityTestingFamily& family, const std::filesystem::path& path) {
  write_text_file(path, family_to_json(family).dump(2) + "\n");
}

ptcodes::PurityTestingFamily load_family(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("family file: parse error: ") + e.what());
  }
  return family_from_json(j);
}

json key_to_json(const authproto::AuthKey& key, const ptcodes::PurityTestingFamily& family) {
  return json{{"format", "qauth-key-v1"},
              {"r", family.r},
              {"s", family.s},
              {"k", key.k},
              {"x", hex64(key.qotp)},
              {"y", hex64(key.y.bits)}};
}

authproto::AuthKey key_from_json(const json& j, const ptcodes::PurityTestingFamily& family) {
  if (j.at("r").get<int>() != family.r || j.at("s").get<int>() != family.s)
    throw std::invalid_argument("key file: family parameters do not match");
  authproto::AuthKey key;
  key.k = j.at("k").get<int>();
  if (key.k < 0 || key.k >= family.code_count())
    throw std::invalid_argument("key file: code index out of range");
  key.qotp = parse_hex64(j.at("x").get<std::string>());
  if (family.m < 32 && (key.qotp >> (2 * family.m)))
    throw std::invalid_argument("key file: qotp key has bits beyond 2m");
  key.y.s = family.s;
  key.y.bits = static_cast<std::uint32_t>(parse_hex64(j.at("y").get<std::string>()));
  if (key.y.bits >> family.s) throw std::invalid_argument("key file: syndrome has bits beyond s");
  return key;
}

void save_key(const authproto::AuthKey& key, const ptcodes::PurityTestingFamily& family,
              const std::filesystem::path& path) {
  write_text_file(path, key_to_json(key, family).dump(2) + "\n");
}

authproto::AuthKey load_key(const std::filesystem::path& path,
                            const ptcodes::PurityTestingFamily& family) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("key file: parse error: ") + e.what());
  }
  return key_from_json(j, family);
}

std::uint64_t key_commitment(const authproto::AuthKey& key,
                             const ptcodes::PurityTestingFamily& family) {
  return fnv1a64(key_to_json(key, family).dump());
}

// ---------------------------------------------------------------------------
// envelope

namespace {
constexpr char kEnvelopeMagic[] = "QAUTHENV1\n";

void append_u32le(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>(v >> (8 * i) & 0xff));
}

void append_f64le(std::string& out, double v) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(v));
  std::memcpy(&bits, &v, sizeof(bits));
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(bits >> (8 * i) & 0xff));
}

double read_f64le(const std::string& data, std::size_t at) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i)
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[at + i])) << (8 * i);
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

}  // namespace

void save_envelope(const Envelope& env, const std::filesystem::path& path) {
  json header{{"format", "qauth-envelope-v1"},
              {"r", env.r},
              {"s", env.s},
              {"n", env.r * env.s},
              {"pad", env.pad},
              {"seed_commitment", hex64(env.key_commitment)}};
  const std::string header_str = header.dump();
  std::string out(kEnvelopeMagic, sizeof(kEnvelopeMagic) - 1);
  append_u32le(out, static_cast<std::uint32_t>(header_str.size()));
  out += header_str;
  for (Eigen::Index i = 0; i < env.payload.size(); ++i) {
    append_f64le(out, env.payload[i].real());
    append_f64le(out, env.payload[i].imag());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("save_envelope: cannot open " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
}

Envelope load_envelope(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_envelope: cannot open " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string data = ss.str();
  const std::size_t magic_len = sizeof(kEnvelopeMagic) - 1;
  if (data.size() < magic_len + 4 || data.compare(0, magic_len, kEnvelopeMagic) != 0)
    throw std::invalid_argument("envelope: bad magic");
  std::uint32_t hlen = 0;
  for (int i = 0; i < 4; ++i)
    hlen |= static_cast<std::uint32_t>(static_cast<unsigned char>(data[magic_len + i])) << (8 * i);
  if (data.size() < magic_len + 4 + hlen) throw std::invalid_argument("envelope: truncated header");
  json header;
  try {
    header = json::parse(data.substr(magic_len + 4, hlen));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("envelope: header parse error: ") + e.what());
  }
  Envelope env;
  env.r = header.at("r").get<int>();
  env.s = header.at("s").get<int>();
  env.pad = header.at("pad").get<int>();
  env.key_commitment = parse_hex64(header.at("seed_commitment").get<std::string>());
  const int n = env.r * env.s;
  const std::size_t amp_count = 1ull << n;
  const std::size_t payload_at = magic_len + 4 + hlen;
  if (data.size() != payload_at + amp_count * 16)
    throw std::invalid_argument("envelope: payload size mismatch");
  env.payload.resize(static_cast<Eigen::Index>(amp_count));
  for (std::size_t i = 0; i < amp_count; ++i) {
    env.payload[static_cast<Eigen::Index>(i)] = {read_f64le(data, payload_at + 16 * i),
                                                 read_f64le(data, payload_at + 16 * i + 8)};
  }
  return env;
}

void save_density_binary(const dense::DensityMatrix& rho, const std::filesystem::path& path) {
  std::string out;
  append_u32le(out, static_cast<std::uint32_t>(rho.dim()));
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      append_f64le(out, rho.entries()(i, j).real());
      append_f64le(out, rho.entries()(i, j).imag());
    }
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("save_density_binary: cannot open " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
}

json density_to_json(const dense::DensityMatrix& rho) {
  if (rho.dim() > 8) throw std::invalid_argument("density_to_json: dim > 8, use the binary form");
  json rows = json::array();
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      row.push_back(json::array({rho.entries()(i, j).real(), rho.entries()(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return json{{"dim", rho.dim()}, {"entries", std::move(rows)}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << content;
}

}  // namespace qauth::serialize
