#pragma once

// Remote prediction protocol: one HTTP POST per question with body
// {"id": "<variant>/<group>/<qi>", "prompt": "<facts rules question>"},
// expecting {"id": ..., "label": "T"|"F"} back. Non-conforming responses
// are recorded per record, never guessed.

#include <string>
#include <vector>

#include "rulebench/evalkit.hpp"

namespace rulebench {

struct RemoteEndpoint {
  std::string host;
  int port = 80;
  std::string path = "/";
  int timeout_ms = 5000;
};

/// Accepts "http://host:port/path"; https is not supported.
RemoteEndpoint parse_endpoint_url(const std::string& url,
                                  int timeout_ms = 5000);

struct RemoteFailure {
  std::string id;
  std::string reason;
};

struct RemoteResult {
  std::vector<PredictionRecord> predictions;
  std::vector<RemoteFailure> failures;
};

RemoteResult fetch_remote_predictions(const Dataset& dataset,
                                      const RemoteEndpoint& endpoint);

}  // namespace rulebench
