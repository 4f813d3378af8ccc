// Copyright 2026 The Taxsan Authors.
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

#include "taxsan/store/content_store.h"

#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "taxsan/common/errors.h"

namespace taxsan::store {
namespace fs = std::filesystem;
namespace {

void check_id(const std::string &id, const char *what) {
  bool ok = !id.empty() && id.front() != '.' && std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' || c == '_' ||
           c == '-' || c == '@';
  });
  if (!ok) throw ValidationError(std::string("invalid ") + what + " for storage: '" + id + "'");
}

std::string read_file(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw NotFoundError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes bytes to a fresh temporary file next to `target` and returns its
// path.
fs::path write_temp(const fs::path &target, const std::string &bytes) {
  static std::atomic<unsigned long> counter{0};
  std::ostringstream name;
  name << ".tmp-" << ::getpid() << '-' << std::hash<std::thread::id>()(std::this_thread::get_id()) << '-'
       << counter.fetch_add(1) << '-' << target.filename().string();
  fs::path tmp = target.parent_path() / name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << bytes;
    out.flush();
    if (!out) throw Error("short write to " + tmp.string());
  }
  return tmp;
}

// Publishes bytes at target, failing if target exists.
void publish_new(const fs::path &target, const std::string &bytes) {
  fs::path tmp = write_temp(target, bytes);
  int rc = ::link(tmp.c_str(), target.c_str());
  int err = errno;
  std::error_code ec;
  fs::remove(tmp, ec);
  if (rc != 0) {
    if (err == EEXIST) throw ConflictError("record already exists: " + target.filename().string());
    throw Error("cannot publish " + target.string() + ": " + std::strerror(err));
  }
}

// Publishes bytes at target, replacing any previous version.
void publish_replace(const fs::path &target, const std::string &bytes) {
  fs::path tmp = write_temp(target, bytes);
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot publish " + target.string());
  }
}

}  // namespace

ContentStore::ContentStore(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_ / "messages");
  fs::create_directories(root_ / "rules");
}

fs::path ContentStore::message_path(const MessageId &id) const {
  check_id(id.str(), "message id");
  return root_ / "messages" / (id.str() + ".json");
}

fs::path ContentStore::rules_path(const UserId &publisher) const {
  check_id(publisher.str(), "publisher id");
  return root_ / "rules" / (publisher.str() + ".json");
}

MessageId ContentStore::put_annotated(const annotate::AnnotatedMessage &m) {
  publish_new(message_path(m.id), annotate::to_json(m));
  return m.id;
}

std::string ContentStore::get_annotated_bytes(const MessageId &id) const {
  fs::path p = message_path(id);
  if (!fs::exists(p)) throw NotFoundError("unknown message: " + id.str());
  return read_file(p);
}

annotate::AnnotatedMessage ContentStore::get_annotated(const MessageId &id) const {
  return annotate::annotated_from_json(get_annotated_bytes(id));
}

bool ContentStore::has_message(const MessageId &id) const { return fs::exists(message_path(id)); }

std::vector<MessageId> ContentStore::message_ids() const {
  std::vector<MessageId> out;
  for (const fs::directory_entry &e : fs::directory_iterator(root_ / "messages")) {
    std::string name = e.path().filename().string();
    if (name.front() == '.' || e.path().extension() != ".json") continue;
    out.emplace_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ContentStore::put_rules(const policy::RuleSet &rules) {
  publish_replace(rules_path(rules.publisher), policy::to_json(rules));
}

std::optional<policy::RuleSet> ContentStore::find_rules(const UserId &publisher) const {
  fs::path p = rules_path(publisher);
  if (!fs::exists(p)) return std::nullopt;
  return policy::rules_from_json(read_file(p));
}

policy::RuleSet ContentStore::get_rules(const UserId &publisher) const {
  auto rules = find_rules(publisher);
  if (!rules) throw NotFoundError("no rules for publisher: " + publisher.str());
  return *rules;
}

void ContentStore::put_contacts(const policy::ContactGraph &graph) {
  std::unique_lock lock(contacts_mu_);
  publish_replace(root_ / "contacts.tsv", graph.to_tsv());
  contacts_stamp_.reset();
}

policy::ContactGraph ContentStore::contacts() const {
  const fs::path p = root_ / "contacts.tsv";
  // Replacement goes through rename, so the inode changes with every write.
  struct ::stat st {};
  if (::stat(p.c_str(), &st) != 0) return {};
  const FileStamp stamp{st.st_ino, st.st_mtim.tv_sec, st.st_mtim.tv_nsec, st.st_size};
  {
    std::shared_lock lock(contacts_mu_);
    if (contacts_stamp_ && *contacts_stamp_ == stamp) return contacts_cache_;
  }
  std::unique_lock lock(contacts_mu_);
  std::istringstream in(read_file(p));
  contacts_cache_ = policy::ContactGraph::load(in);
  contacts_stamp_ = stamp;
  return contacts_cache_;
}

std::string ContentStore::get_category(const UserId &owner, const UserId &contact) const {
  return contacts().category_of(owner, contact);
}

}  // namespace taxsan::store
