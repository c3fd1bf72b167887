#include "rulebench/remote.hpp"

#include "httplib.h"
#include "json.hpp"
#include "rulebench/text.hpp"

namespace rulebench {

namespace {

using nlohmann::json;

}  // namespace

RemoteEndpoint parse_endpoint_url(const std::string& url, int timeout_ms) {
  const std::string scheme = "http://";
  if (url.rfind(scheme, 0) != 0) {
    throw Error("endpoint must start with http://, got " + url);
  }
  RemoteEndpoint endpoint;
  endpoint.timeout_ms = timeout_ms;
  std::string rest = url.substr(scheme.size());
  const std::size_t slash = rest.find('/');
  if (slash != std::string::npos) {
    endpoint.path = rest.substr(slash);
    rest = rest.substr(0, slash);
  }
  const std::size_t colon = rest.find(':');
  if (colon != std::string::npos) {
    endpoint.host = rest.substr(0, colon);
    endpoint.port = std::stoi(rest.substr(colon + 1));
  } else {
    endpoint.host = rest;
  }
  if (endpoint.host.empty()) throw Error("endpoint host missing in " + url);
  return endpoint;
}

RemoteResult fetch_remote_predictions(const Dataset& dataset,
                                      const RemoteEndpoint& endpoint) {
  httplib::Client client(endpoint.host, endpoint.port);
  client.set_connection_timeout(0, endpoint.timeout_ms * 1000);
  client.set_read_timeout(endpoint.timeout_ms / 1000,
                          (endpoint.timeout_ms % 1000) * 1000);
  client.set_write_timeout(endpoint.timeout_ms / 1000,
                           (endpoint.timeout_ms % 1000) * 1000);

  RemoteResult result;
  for (const std::string& split : scored_splits(dataset)) {
    for (const Record& record : split_records(dataset, split)) {
      const std::string id = prediction_id(record.variant, record.group_id,
                                           record.question_index);
      const json request{{"id", id},
                         {"prompt", serialize_prompt(record.facts,
                                                     record.rules,
                                                     record.question)}};
      httplib::Result response =
          client.Post(endpoint.path, request.dump(), "application/json");
      if (!response) {
        result.failures.push_back(
            RemoteFailure{id, "transport: " + httplib::to_string(
                                                  response.error())});
        continue;
      }
      if (response->status != 200) {
        result.failures.push_back(RemoteFailure{
            id, "http status " + std::to_string(response->status)});
        continue;
      }
      json body;
      try {
        body = json::parse(response->body);
      } catch (const json::exception& e) {
        result.failures.push_back(
            RemoteFailure{id, std::string("malformed-response: ") + e.what()});
        continue;
      }
      if (!body.contains("label") || !body["label"].is_string()) {
        result.failures.push_back(
            RemoteFailure{id, "malformed-response: no label field"});
        continue;
      }
      const std::string label = body["label"].get<std::string>();
      if (label != "T" && label != "F") {
        result.failures.push_back(RemoteFailure{
            id, "malformed-response: label '" + label + "' not in {T,F}"});
        continue;
      }
      if (body.contains("id") && body["id"].is_string() &&
          body["id"].get<std::string>() != id) {
        result.failures.push_back(
            RemoteFailure{id, "malformed-response: id mismatch"});
        continue;
      }
      result.predictions.push_back(PredictionRecord{
          record.group_id, record.variant, record.question_index, label});
    }
  }
  return result;
}

}  // namespace rulebench
