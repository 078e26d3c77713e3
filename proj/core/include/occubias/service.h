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

// HTTP facade over a Runtime.
//
//   POST /api/v1/analyze      {"text", "year_start", "year_end", "country"}
//                             -> 200 report | 400 | 413 | 502 partial report
//   GET  /api/v1/occupations  -> [{"lemma", "class"}] sorted by lemma
//   GET  /api/v1/health       -> {"status", "lexicon_counts", "backend_mode"}
//
// The service keeps no user text; only the evidence cache lives on.

#ifndef OCCUBIAS_SERVICE_H_
#define OCCUBIAS_SERVICE_H_

#include <memory>
#include <string>
#include <string_view>

#include "occubias/config.h"

namespace occubias {

struct HttpResponse {
  int status = 200;
  std::string body;
};

// Transport-independent request handling; the Server routes to these.
class ServiceHandlers {
 public:
  explicit ServiceHandlers(const Runtime &runtime) : runtime_(runtime) {}

  HttpResponse Analyze(std::string_view body) const;
  HttpResponse Occupations() const;
  HttpResponse Health() const;

 private:
  const Runtime &runtime_;
};

struct ServerOptions {
  std::string bind_address = "127.0.0.1";
  // 0 picks a free port.
  int port = 8080;
  std::string cors_origin = "*";
};

class Server {
 public:
  Server(const Runtime &runtime, ServerOptions options);
  ~Server();

  Server(const Server &) = delete;
  Server &operator=(const Server &) = delete;

  // Binds the socket and returns the bound port. Throws std::runtime_error.
  int Bind();
  // Serves until Stop(); call Bind() first.
  void Serve();
  // Bind() + Serve() on a background thread; returns the bound port.
  int Start();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace occubias

#endif  // OCCUBIAS_SERVICE_H_
