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

#include <gtest/gtest.h>

#include <filesystem>
#include <thread>

#include "adinkra/session.hpp"

using namespace adinkra;

TEST(Session, NamedHeights) {
  EXPECT_EQ(named_height(5, "valise"), HeightFn::valise(5));
  EXPECT_EQ(named_height(5, "inverted_valise"), invert(HeightFn::valise(5)));
  EXPECT_EQ(named_height(4, "fully_extended"), HeightFn::fully_extended(4));
  EXPECT_THROW(named_height(5, "sideways"), std::invalid_argument);
}

TEST(Session, ApplyAndReplay) {
  Session s("a", HeightFn::fully_extended(5));
  s.apply({Move::Kind::Lower, Vertex{31}});
  s.apply({Move::Kind::Lower, Vertex{30}});
  s.apply({Move::Kind::Raise, Vertex{30}});
  EXPECT_EQ(s.history().size(), 3u);
  EXPECT_EQ(s.replay(), s.current());
  EXPECT_EQ(s.current(), lower(HeightFn::fully_extended(5), Vertex{31}));
  EXPECT_THROW(s.apply({Move::Kind::Lower, Vertex{0}}), std::invalid_argument);
  EXPECT_EQ(s.history().size(), 3u);
  EXPECT_THROW(Session("b", HeightFn(2, std::vector<int>{0, 0, 0, 0})), std::invalid_argument);
}

TEST(SessionStore, CreateGetApplyErase) {
  SessionStore store;
  const std::string id = store.create(HeightFn::fully_extended(5));
  HeightFn before;
  const Session after = store.apply(id, {Move::Kind::Lower, Vertex{31}}, &before);
  EXPECT_EQ(before, HeightFn::fully_extended(5));
  EXPECT_EQ(store.get(id).current(), after.current());
  EXPECT_NE(store.create(HeightFn::valise(5)), id);
  EXPECT_EQ(store.ids().size(), 2u);
  EXPECT_TRUE(store.erase(id));
  EXPECT_THROW(store.get(id), SessionNotFound);
}

TEST(SessionStore, SnapshotRoundTrip) {
  SessionStore store;
  const std::string id = store.create(HeightFn::fully_extended(5));
  store.apply(id, {Move::Kind::Lower, Vertex{31}});
  store.apply(id, {Move::Kind::Lower, Vertex{30}});

  const auto path = std::filesystem::temp_directory_path() / "adinkra_snapshot_test.json";
  store.save(path);
  SessionStore loaded;
  loaded.load(path);
  std::filesystem::remove(path);
  EXPECT_EQ(loaded.get(id).current(), store.get(id).current());
  EXPECT_EQ(loaded.get(id).history(), store.get(id).history());
  // Fresh ids do not collide with restored ones.
  EXPECT_NE(loaded.create(HeightFn::valise(5)), id);
}

TEST(SessionStore, RejectsBadSnapshot) {
  SessionStore store;
  EXPECT_THROW(store.restore_json("{"), std::runtime_error);
  // The second lowering of the top is illegal.
  const std::string bad = R"({"sessions": [{"id": "x", "n": 1, "initial": [0, 1],
      "history": [{"kind": "lower", "vertex": 1}, {"kind": "lower", "vertex": 1}]}]})";
  EXPECT_THROW(store.restore_json(bad), std::runtime_error);
}

// Many threads steering their own sessions plus one shared session; the
// shared one must replay consistently afterwards.
TEST(SessionStore, ConcurrentMoves) {
  SessionStore store;
  const std::string shared = store.create(HeightFn::valise(5));
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&store, &shared] {
      const std::string mine = store.create(HeightFn::fully_extended(5));
      for (int i = 0; i < 50; ++i) {
        store.apply(mine, {Move::Kind::Lower, Vertex{31}});
        store.apply(mine, {Move::Kind::Raise, Vertex{31}});
        // Lower a top of the shared session if one is free, then raise it.
        try {
          store.apply(shared, {Move::Kind::Lower, Vertex{31}});
          store.apply(shared, {Move::Kind::Raise, Vertex{31}});
        } catch (const std::invalid_argument&) {
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  const Session s = store.get(shared);
  EXPECT_EQ(s.replay(), s.current());
  EXPECT_EQ(store.ids().size(), 9u);
}
