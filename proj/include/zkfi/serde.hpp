#ifndef ZKFI_SERDE_HPP_
#define ZKFI_SERDE_HPP_

#include <json.hpp>

#include "zkfi/account.hpp"
#include "zkfi/compliance.hpp"
#include "zkfi/pool.hpp"
#include "zkfi/setup.hpp"

namespace zkfi {

using Json = nlohmann::json;

// Hex helpers for wire fields (lowercase, no prefix).
Json pointJson(const AffinePoint& p);
AffinePoint pointFromJson(const Json& j);

Json publicInputsJson(const PublicInputs& pub);
PublicInputs publicInputsFromJson(const Json& j);

Json proofJson(const Proof& proof);
Proof proofFromJson(const Json& j);

Json envelopeJson(const TxEnvelope& envelope);
TxEnvelope envelopeFromJson(const Json& j);

Json complianceEnvelopeJson(const ComplianceEnvelope& env);
ComplianceEnvelope complianceEnvelopeFromJson(const Json& j);

Json requestJson(const RevocationRequest& request);
RevocationRequest requestFromJson(const Json& j);

Json partialJson(const PartialDecryption& partial);
PartialDecryption partialFromJson(const Json& j);

Json verifyingKeyJson(const VerifyingKey& key);
VerifyingKey verifyingKeyFromJson(const Json& j);
Json provingKeyJson(const ProvingKey& key);
ProvingKey provingKeyFromJson(const Json& j);

Json accountJson(const ShieldedAccount& account);
ShieldedAccount accountFromJson(const Json& j);

Json guardianShareJson(const Share<Fr>& share);
Share<Fr> guardianShareFromJson(const Json& j);

Json poolParamsJson(const PoolParams& params);
PoolParams poolParamsFromJson(const Json& j);

Json signatureJson(const Signature& sig);
Signature signatureFromJson(const Json& j);

// Proxy configuration record used by the simulator to build proxies.
struct ProxyConfig {
    std::string id;
    std::string kind;       // "swap" | "stake"
    uint32_t assetIn = 0;
    uint32_t assetOut = 0;
    U256 reserveIn;   // swap only
    U256 reserveOut;  // swap only
};
Json proxyConfigJson(const ProxyConfig& cfg);
ProxyConfig proxyConfigFromJson(const Json& j);

}  // namespace zkfi

#endif
