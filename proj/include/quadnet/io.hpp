#pragma once

#include "quadnet/gitstab.hpp"
#include "quadnet/net.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace quadnet {

inline constexpr int kFormatVersion = 1;

using Json = nlohmann::ordered_json;

/// A net as stored on disk. `frame`, when present, is applied as x -> M x
/// before any analysis.
struct NetDocument {
  Net net;
  std::optional<RatMatrix> frame;

  Net effectiveNet() const { return frame ? net.transformed(*frame) : net; }
};

NetDocument netDocumentFromJson(const Json& j);
Json toJson(const NetDocument& doc);

NetDocument readNetDocument(const std::string& path);
std::string readTextFile(const std::string& path);

Json toJson(const RatMatrix& m);
RatMatrix matrixFromJson(const Json& j, std::size_t rows, std::size_t cols);
Json toJson(const WeightVector& w);
Json toJson(const Witness& w);

} // namespace quadnet
