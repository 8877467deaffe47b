#include "fdra/qnet.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace fdra {

namespace {
constexpr char kMagic[] = "FDRAQNET1\n";
constexpr size_t kMagicLen = sizeof(kMagic) - 1;
}  // namespace

void save_qnetwork(const std::string& path, const QNetwork& net, const QNetHeader& header) {
  nlohmann::json j;
  j["layer_sizes"] = header.layer_sizes.empty() ? net.layer_sizes() : header.layer_sizes;
  j["activation"] = header.activation;
  j["dtype"] = header.dtype;
  j["se_checksum"] = header.se_checksum;
  j["config_hash"] = header.config_hash;
  j["action_half_width"] = header.action_half_width;
  const std::string hdr = j.dump();

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out.write(kMagic, kMagicLen);
  const uint32_t len = static_cast<uint32_t>(hdr.size());
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  out.write(hdr.data(), hdr.size());
  const auto flat = net.to_flat();
  out.write(reinterpret_cast<const char*>(flat.data()),
            static_cast<std::streamsize>(flat.size() * sizeof(float)));
  if (!out) throw std::runtime_error("failed writing model file: " + path);
}

QNetwork load_qnetwork(const std::string& path, QNetHeader* header_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  char magic[kMagicLen];
  in.read(magic, kMagicLen);
  if (!in || std::memcmp(magic, kMagic, kMagicLen) != 0)
    throw std::runtime_error("not a qnetwork file: " + path);
  uint32_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof len);
  std::string hdr(len, '\0');
  in.read(hdr.data(), len);
  if (!in) throw std::runtime_error("truncated model header: " + path);

  const nlohmann::json j = nlohmann::json::parse(hdr);
  QNetHeader header;
  header.layer_sizes = j.at("layer_sizes").get<std::vector<int>>();
  header.activation = j.at("activation").get<std::string>();
  header.dtype = j.at("dtype").get<std::string>();
  header.se_checksum = j.value("se_checksum", "");
  header.config_hash = j.value("config_hash", "");
  header.action_half_width = j.value("action_half_width", 2);
  if (header.activation != "relu" || header.dtype != "float32")
    throw std::runtime_error("unsupported model format in " + path);

  QNetwork net(header.layer_sizes);
  std::vector<float> flat(net.param_count());
  in.read(reinterpret_cast<char*>(flat.data()),
          static_cast<std::streamsize>(flat.size() * sizeof(float)));
  if (!in) throw std::runtime_error("truncated model parameters: " + path);
  net.from_flat(flat);
  if (header_out) *header_out = header;
  return net;
}

}  // namespace fdra
