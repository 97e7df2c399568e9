// Copyright 2026 The Adinkra Heights Authors
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

#include "service.hpp"

#include <charconv>
#include <iostream>

#include <httplib.h>
#include <json.hpp>

#include "adinkra/morse.hpp"
#include "adinkra/serialize.hpp"

namespace adinkra::service {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json";

struct HttpError {
  int status;
  std::string message;
};

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

json image_json(const HeightFn& h) {
  if (h.dimension() != 5) return nullptr;
  return json::parse(image_to_json(height_image(h)));
}

json session_json(const Session& s) {
  json history = json::array();
  for (const Move& m : s.history()) {
    history.push_back({{"kind", to_string(m.kind)}, {"vertex", m.vertex.bits}});
  }
  return {{"id", s.id()},
          {"n", s.dimension()},
          {"height", s.current().to_vector()},
          {"history", history},
          {"degree", morse_divisor(s.current()).degree()},
          {"image", image_json(s.current())}};
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    json body = json::parse(req.body);
    if (!body.is_object()) throw HttpError{400, "request body must be a JSON object"};
    return body;
  } catch (const json::parse_error& e) {
    throw HttpError{400, std::string("malformed JSON: ") + e.what()};
  }
}

HeightFn initial_from(const json& body) {
  try {
    const int n = body.value("n", 5);
    if (n < 1 || n > 5) throw HttpError{400, "n must be between 1 and 5"};
    if (body.contains("values")) return checked_height(n, body.at("values").get<std::vector<int>>());
    if (body.contains("pins")) return from_pins(n, parse_pins(n, body.at("pins").get<std::string>()));
    return named_height(n, body.value("init", std::string("fully_extended")));
  } catch (const HttpError&) {
    throw;
  } catch (const json::exception& e) {
    throw HttpError{400, e.what()};
  } catch (const std::exception& e) {
    throw HttpError{422, e.what()};
  }
}

Color curve_param(const httplib::Request& req, int n) {
  if (!req.has_param("k")) throw HttpError{400, "missing query parameter k"};
  const std::string text = req.get_param_value("k");
  int k = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc{} || ptr != text.data() + text.size() || k < 1 || k > n) {
    throw HttpError{400, "k must be an integer in [1, " + std::to_string(n) + "]"};
  }
  return k;
}

// Runs a handler, mapping exceptions to JSON error responses.
template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const HttpError& e) {
      reply(res, e.status, {{"error", e.message}});
    } catch (const SessionNotFound& e) {
      reply(res, 404, {{"error", e.what()}});
    } catch (const std::invalid_argument& e) {
      reply(res, 422, {{"error", e.what()}});
    } catch (const std::exception& e) {
      reply(res, 500, {{"error", e.what()}});
    }
  };
}

}  // namespace

Service::Service(Options options) : options_(std::move(options)) {
  if (options_.snapshot && std::filesystem::exists(*options_.snapshot)) {
    store_.load(*options_.snapshot);
  }
}

Service::~Service() = default;

const CensusResult& Service::census_cache() {
  std::call_once(census_once_, [this] {
    EnumerateOptions opts;
    opts.threads = options_.threads;
    const HeightCatalog cat = enumerate_heights(5, opts);
    census_ = std::make_unique<CensusResult>(census(catalog_images(cat, options_.threads)));
  });
  return *census_;
}

void Service::persist() {
  if (!options_.snapshot) return;
  std::lock_guard lock(persist_mu_);
  store_.save(*options_.snapshot);
}

void Service::mount(httplib::Server& server) {
  // Unmatched routes and methods still get a JSON body.
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) res.set_content(json{{"error", httplib::status_message(res.status)}}.dump(), kJson);
  });

  server.Get("/health", guarded([](const httplib::Request&, httplib::Response& res) {
    reply(res, 200, {{"ok", true}});
  }));

  server.Post("/session", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    const std::string id = store_.create(initial_from(body));
    persist();
    reply(res, 201, session_json(store_.get(id)));
  }));

  server.Get(R"(/session/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
    reply(res, 200, session_json(store_.get(req.matches[1])));
  }));

  auto move_route = [this](Move::Kind kind) {
    return guarded([this, kind](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      if (!body.contains("vertex") || !body.at("vertex").is_number_integer()) {
        throw HttpError{400, R"(body must contain an integer "vertex")"};
      }
      const std::string id = req.matches[1];
      const Session before = store_.get(id);
      const auto v = body.at("vertex").get<std::int64_t>();
      if (v < 0 || v >= static_cast<std::int64_t>(before.current().size())) {
        throw HttpError{422, "vertex " + std::to_string(v) + " is outside the cube"};
      }
      HeightFn prior;
      const Session after =
          store_.apply(id, {kind, Vertex{static_cast<std::uint32_t>(v)}}, &prior);
      persist();
      json out = session_json(after);
      if (after.dimension() == 5) {
        const JacobianImage a = height_image(prior);
        const JacobianImage b = height_image(after.current());
        json delta = json::array();
        for (Color k = 1; k <= kCurveCount; ++k) {
          const GroupElt d = b[k] - a[k];
          delta.push_back({{"k", k}, {"a", d.a}, {"b4", d.b}, {"c2", d.c}});
        }
        out["delta"] = delta;
      }
      reply(res, 200, out);
    });
  };
  server.Post(R"(/session/([^/]+)/lower)", move_route(Move::Kind::Lower));
  server.Post(R"(/session/([^/]+)/raise)", move_route(Move::Kind::Raise));

  server.Get(R"(/session/([^/]+)/divisor)",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               const Session s = store_.get(req.matches[1]);
               res.status = 200;
               res.set_content(divisor_to_json(morse_divisor(s.current())), kJson);
             }));

  server.Get(R"(/session/([^/]+)/image)",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               const Session s = store_.get(req.matches[1]);
               if (s.dimension() != 5) throw HttpError{409, "images are defined for n = 5 only"};
               res.status = 200;
               res.set_content(image_to_json(height_image(s.current())), kJson);
             }));

  server.Get(R"(/session/([^/]+)/moves)",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               const Session s = store_.get(req.matches[1]);
               json lower = json::array();
               json raise = json::array();
               for (Vertex v : lowering_targets(s.current())) lower.push_back(v.bits);
               for (Vertex v : raising_targets(s.current())) raise.push_back(v.bits);
               reply(res, 200, {{"lower", lower}, {"raise", raise}});
             }));

  server.Get(R"(/session/([^/]+)/splitting)",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               const Session s = store_.get(req.matches[1]);
               const int n = s.dimension();
               if (n < 3) throw HttpError{409, "color splittings need n >= 3"};
               const Color k = curve_param(req, n);
               const Vertex base{(1u << n) - 1};
               json labels = json::array();
               int plus = 0;
               for (std::uint32_t v = 0; v < (1u << n); ++v) {
                 const int sign = color_split(n, k, base, Vertex{v});
                 plus += sign > 0 ? 1 : 0;
                 labels.push_back({{"vertex", v}, {"sign", sign}});
               }
               reply(res, 200,
                     {{"k", k}, {"base", base.bits}, {"labels", labels}, {"plus", plus},
                      {"minus", (1 << n) - plus}});
             }));

  server.Get("/census", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const Color k = curve_param(req, kCurveCount);
    res.status = 200;
    res.set_content(census_to_json(census_cache(), k), kJson);
  }));
}

int serve(const std::string& host, int port, Options options) {
  Service service(std::move(options));
  httplib::Server server;
  service.mount(server);
  std::cerr << "listening on " << host << ":" << port << "\n";
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace adinkra::service
