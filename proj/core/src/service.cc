// Copyright 2026 The Occubias Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "occubias/service.h"

#include <optional>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "occubias/report.h"

namespace occubias {
namespace {

using ojson = nlohmann::ordered_json;

constexpr char kJsonType[] = "application/json";
// Generous bound for a JSON-escaped 64 KiB text field.
constexpr std::size_t kMaxBodyBytes = 1 << 20;
constexpr long long kMinYear = -100000;
constexpr long long kMaxYear = 100000;

HttpResponse Error(int status, const std::string &message) {
  ojson body;
  body["error"] = message;
  return {status, body.dump(-1, ' ', false, ojson::error_handler_t::replace)};
}

}  // namespace

HttpResponse ServiceHandlers::Analyze(std::string_view body) const {
  const auto request = nlohmann::json::parse(body, nullptr, false);
  if (request.is_discarded() || !request.is_object()) {
    return Error(400, "request body must be a JSON object");
  }
  auto text = request.find("text");
  auto start = request.find("year_start");
  auto end = request.find("year_end");
  auto country = request.find("country");
  if (text == request.end() || !text->is_string()) {
    return Error(400, "text must be a string");
  }
  if (start == request.end() || !start->is_number_integer() ||
      end == request.end() || !end->is_number_integer()) {
    return Error(400, "year_start and year_end must be integers");
  }
  if (country == request.end() || !country->is_string()) {
    return Error(400, "country must be a string");
  }
  const auto year_start = start->get<long long>();
  const auto year_end = end->get<long long>();
  if (year_start < kMinYear || year_start > kMaxYear || year_end < kMinYear ||
      year_end > kMaxYear) {
    return Error(400, "years out of range");
  }
  const auto &text_value = text->get_ref<const std::string &>();
  if (text_value.size() > kMaxTextBytes) {
    return Error(413, "text exceeds 64 KiB");
  }
  std::optional<AnalysisReport> report;
  try {
    report = runtime_.Analyze(text_value, static_cast<int>(year_start),
                              static_cast<int>(year_end),
                              country->get<std::string>());
  } catch (const std::invalid_argument &e) {
    return Error(400, e.what());
  }
  return {report->partial() ? 502 : 200, ReportToJson(*report)};
}

HttpResponse ServiceHandlers::Occupations() const {
  return {200, OccupationsToJson(runtime_.lexicons().occupations)};
}

HttpResponse ServiceHandlers::Health() const {
  const LexiconStats stats = runtime_.lexicons().Stats();
  ojson body;
  body["status"] = "ok";
  body["lexicon_counts"] = {{"occupations", stats.occupations},
                            {"neutral_occupations", stats.neutral_occupations},
                            {"male_occupations", stats.male_occupations},
                            {"female_occupations", stats.female_occupations},
                            {"male_names", stats.male_names},
                            {"female_names", stats.female_names}};
  body["backend_mode"] = runtime_.provider().backend_mode();
  return {200, body.dump()};
}

struct Server::Impl {
  Impl(const Runtime &runtime, ServerOptions opts)
      : handlers(runtime), options(std::move(opts)) {}

  ServiceHandlers handlers;
  ServerOptions options;
  httplib::Server server;
  std::thread thread;
  int port = -1;
};

Server::Server(const Runtime &runtime, ServerOptions options)
    : impl_(std::make_unique<Impl>(runtime, std::move(options))) {
  auto &server = impl_->server;
  const std::string origin = impl_->options.cors_origin;
  server.set_payload_max_length(kMaxBodyBytes);
  server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                              {"Vary", "Origin"}});
  auto reply = [](httplib::Response &res, const HttpResponse &out) {
    res.status = out.status;
    res.set_content(out.body, kJsonType);
  };
  const ServiceHandlers &handlers = impl_->handlers;
  server.Post("/api/v1/analyze",
              [&handlers, reply](const httplib::Request &req,
                                 httplib::Response &res) {
                HttpResponse out;
                try {
                  out = handlers.Analyze(req.body);
                } catch (const std::exception &e) {
                  out = Error(500, e.what());
                }
                reply(res, out);
              });
  server.Get("/api/v1/occupations",
             [&handlers, reply](const httplib::Request &, httplib::Response &res) {
               reply(res, handlers.Occupations());
             });
  server.Get("/api/v1/health",
             [&handlers, reply](const httplib::Request &, httplib::Response &res) {
               reply(res, handlers.Health());
             });
  server.Options(R"(/api/v1/.*)",
                 [](const httplib::Request &, httplib::Response &res) {
                   res.status = 204;
                   res.set_header("Access-Control-Allow-Methods",
                                  "GET, POST, OPTIONS");
                   res.set_header("Access-Control-Allow-Headers",
                                  "Content-Type");
                 });
}

Server::~Server() { Stop(); }

int Server::Bind() {
  auto &opts = impl_->options;
  if (opts.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(opts.bind_address);
  } else if (impl_->server.bind_to_port(opts.bind_address, opts.port)) {
    impl_->port = opts.port;
  }
  if (impl_->port <= 0) {
    throw std::runtime_error("cannot bind " + opts.bind_address + ":" +
                             std::to_string(opts.port));
  }
  return impl_->port;
}

void Server::Serve() { impl_->server.listen_after_bind(); }

int Server::Start() {
  const int port = Bind();
  impl_->thread = std::thread([this] { Serve(); });
  impl_->server.wait_until_ready();
  return port;
}

void Server::Stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace occubias
