namespace folia {}
