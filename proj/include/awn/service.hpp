#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>

#include "awn/error.hpp"
#include "awn/project.hpp"
#include "awn/serialize.hpp"

namespace awn::service {

// One HTTP status per error code.
int http_status(ErrorCode code);

// {"error": {"code": "<kebab>", "message": "...", "field": "..."}}
ordered_json error_body(const Error& e);

struct Reply {
  int status = 200;
  std::string body;  // JSON
};

using Query = std::map<std::string, std::string>;

// The request handlers, independent of the transport. Reads take a shared
// lock; mutations take the exclusive lock and return only after the new
// audit events are on disk.
class Api {
public:
  explicit Api(project::Project& project) : project_(project) {}

  Reply list_tasks(const Query& q) const;
  Reply get_task(const std::string& id) const;
  // action: contribution | peer-review | expert-review | claim | assign-reviewer
  Reply post_task(const std::string& id, const std::string& action, const std::string& body);
  Reply get_synset(const std::string& id) const;
  Reply lookup(const Query& q) const;
  Reply contribution_metrics(const Query& q) const;
  Reply correctness_metrics() const;
  Reply completeness_metrics() const;

private:
  project::Project& project_;
  mutable std::shared_mutex mutex_;
};

// Binds and serves until stop(). Throws port-in-use when the port is taken.
class Server {
public:
  explicit Server(project::Project& project);
  ~Server();

  // Port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port);
  void listen();  // blocks
  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace awn::service
