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

#include "adinkra/session.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace adinkra {

using nlohmann::json;

std::string_view to_string(Move::Kind kind) { return kind == Move::Kind::Lower ? "lower" : "raise"; }

HeightFn named_height(int n, std::string_view name) {
  if (name == "fully_extended") return HeightFn::fully_extended(n);
  if (name == "valise") return HeightFn::valise(n);
  if (name == "inverted_valise") return invert(HeightFn::valise(n));
  throw std::invalid_argument("unknown initial height '" + std::string(name) + "'");
}

Session::Session(std::string id, HeightFn initial)
    : id_(std::move(id)), initial_(initial), current_(initial) {
  const Validation v = validate(initial);
  if (!v) throw std::invalid_argument("Session: initial height is invalid: " + v.reason);
}

void Session::apply(const Move& m) {
  current_ = m.kind == Move::Kind::Lower ? lower(current_, m.vertex) : raise(current_, m.vertex);
  history_.push_back(m);
}

HeightFn Session::replay() const {
  HeightFn h = initial_;
  for (const Move& m : history_) {
    h = m.kind == Move::Kind::Lower ? lower(h, m.vertex) : raise(h, m.vertex);
  }
  return h;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mu_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionNotFound(id);
  return it->second;
}

std::string SessionStore::fresh_id() {
  // Caller holds the exclusive lock.
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream os;
  os << std::hex << rng() << '-' << ++counter_;
  return os.str();
}

std::string SessionStore::create(HeightFn initial) {
  std::unique_lock lock(mu_);
  std::string id = fresh_id();
  sessions_.emplace(id, std::make_shared<Entry>(Session(id, initial)));
  return id;
}

Session SessionStore::get(const std::string& id) const {
  auto entry = find(id);
  std::lock_guard lock(entry->mu);
  return entry->session;
}

Session SessionStore::apply(const std::string& id, const Move& m, HeightFn* before) {
  auto entry = find(id);
  std::lock_guard lock(entry->mu);
  if (before) *before = entry->session.current();
  entry->session.apply(m);
  return entry->session;
}

bool SessionStore::erase(const std::string& id) {
  std::unique_lock lock(mu_);
  return sessions_.erase(id) > 0;
}

std::vector<std::string> SessionStore::ids() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, _] : sessions_) out.push_back(id);
  return out;
}

std::string SessionStore::snapshot_json() const {
  std::shared_lock lock(mu_);
  json sessions = json::array();
  for (const auto& [id, entry] : sessions_) {
    std::lock_guard inner(entry->mu);
    const Session& s = entry->session;
    json history = json::array();
    for (const Move& m : s.history()) {
      history.push_back({{"kind", to_string(m.kind)}, {"vertex", m.vertex.bits}});
    }
    sessions.push_back({{"id", id},
                        {"n", s.dimension()},
                        {"initial", s.initial().to_vector()},
                        {"history", history}});
  }
  return json{{"sessions", sessions}, {"counter", counter_}}.dump(2);
}

void SessionStore::restore_json(std::string_view text) {
  std::map<std::string, std::shared_ptr<Entry>> loaded;
  std::uint64_t counter = 0;
  try {
    const json doc = json::parse(text);
    counter = doc.value("counter", std::uint64_t{0});
    for (const json& s : doc.at("sessions")) {
      const int n = s.at("n").get<int>();
      const auto values = s.at("initial").get<std::vector<int>>();
      Session session(s.at("id").get<std::string>(), HeightFn(n, values));
      for (const json& m : s.at("history")) {
        const std::string kind = m.at("kind").get<std::string>();
        if (kind != "lower" && kind != "raise") throw std::runtime_error("bad move kind " + kind);
        session.apply({kind == "lower" ? Move::Kind::Lower : Move::Kind::Raise,
                       Vertex{m.at("vertex").get<std::uint32_t>()}});
      }
      const std::string id = session.id();
      loaded.emplace(id, std::make_shared<Entry>(std::move(session)));
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("session snapshot: ") + e.what());
  }
  std::unique_lock lock(mu_);
  sessions_ = std::move(loaded);
  counter_ = std::max(counter_, counter);
}

void SessionStore::save(const std::filesystem::path& path) const {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << snapshot_json();
  }
  std::filesystem::rename(tmp, path);
}

void SessionStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  restore_json(buf.str());
}

}  // namespace adinkra
