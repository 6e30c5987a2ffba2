#include "hoops/params.hpp"

#include "hoops/csv.hpp"
#include "hoops/io_util.hpp"

namespace hoops {

static double want_num(const std::map<std::string, std::string>& kv,
                       const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw std::runtime_error("config missing key: " + key);
  size_t pos = 0;
  double v = std::stod(it->second, &pos);
  if (pos != it->second.size())
    throw std::runtime_error("config value for " + key + " is not a number");
  return v;
}

HyperParams hyper_from_file(const std::filesystem::path& path) {
  auto kv = read_key_value_file(path);
  HyperParams h;
  h.mu_alpha = want_num(kv, "mu_alpha");
  h.sigma_alpha = want_num(kv, "sigma_alpha");
  h.mu_beta = want_num(kv, "mu_beta");
  h.sigma_beta = want_num(kv, "sigma_beta");
  h.gamma = want_num(kv, "gamma");
  h.sigma = want_num(kv, "sigma");
  h.validate();
  return h;
}

void hyper_to_file(const HyperParams& h, const std::filesystem::path& path) {
  atomic_write_file(path, render_key_value({
                              {"mu_alpha", fmt_double(h.mu_alpha)},
                              {"sigma_alpha", fmt_double(h.sigma_alpha)},
                              {"mu_beta", fmt_double(h.mu_beta)},
                              {"sigma_beta", fmt_double(h.sigma_beta)},
                              {"gamma", fmt_double(h.gamma)},
                              {"sigma", fmt_double(h.sigma)},
                          }));
}

TransitionParams transition_from_file(const std::filesystem::path& path) {
  auto kv = read_key_value_file(path);
  TransitionParams t;
  t.p = want_num(kv, "p");
  t.s_alpha = want_num(kv, "s_alpha");
  t.s_beta = want_num(kv, "s_beta");
  t.validate();
  return t;
}

void transition_to_file(const TransitionParams& t,
                        const std::filesystem::path& path) {
  atomic_write_file(path, render_key_value({
                              {"p", fmt_double(t.p)},
                              {"s_alpha", fmt_double(t.s_alpha)},
                              {"s_beta", fmt_double(t.s_beta)},
                          }));
}

}  // namespace hoops
