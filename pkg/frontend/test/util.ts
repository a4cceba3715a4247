import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type {
  ApiSurface,
  CatalogResponse,
  LibrariesResponse,
  RankResponse,
  RebalanceResponse,
  ReferenceWeightsResponse,
  ScoreResponse,
  WhatIfResponse,
} from '../src/api.js';
import type { Rational } from '../src/rational.js';

const here = dirname(fileURLToPath(import.meta.url));

// eslint-disable-next-line @typescript-eslint/no-explicit-any
export function fixture<T = any>(name: string): T {
  return JSON.parse(readFileSync(join(here, 'fixtures', name), 'utf-8')) as T;
}

/** Key-order-insensitive JSON for structural comparison. */
export function canonicalJson(value: unknown): string {
  if (Array.isArray(value)) {
    return `[${value.map(canonicalJson).join(',')}]`;
  }
  if (value !== null && typeof value === 'object') {
    const entries = Object.entries(value as Record<string, unknown>)
      .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
      .map(([key, inner]) => `${JSON.stringify(key)}:${canonicalJson(inner)}`);
    return `{${entries.join(',')}}`;
  }
  return JSON.stringify(value);
}

/**
 * ApiSurface backed by responses recorded from the real service. The
 * rebalance stub insists on receiving exactly the recorded request, so a
 * drift in what the client sends fails loudly instead of being absorbed.
 */
export class FixtureApi implements ApiSurface {
  rankCalls: Array<{ libraryIds: string[]; weights: Record<string, Rational> }> = [];
  rebalanceCalls: Array<{ weights: Record<string, Rational>; pinned: number[] }> = [];

  async catalog(): Promise<CatalogResponse> {
    return fixture('catalog.json').response;
  }

  async libraries(): Promise<LibrariesResponse> {
    return fixture('libraries.json').response;
  }

  async referenceWeights(): Promise<ReferenceWeightsResponse> {
    return fixture('reference.json').response;
  }

  async rank(
    libraryIds: string[],
    weights: Record<string, Rational>,
  ): Promise<RankResponse> {
    this.rankCalls.push({ libraryIds, weights });
    return fixture('rank.json').response;
  }

  async score(): Promise<ScoreResponse> {
    return fixture('score_tink.json').response;
  }

  async whatIf(): Promise<WhatIfResponse> {
    return fixture('whatif.json').response;
  }

  async rebalance(
    weights: Record<string, Rational>,
    pinned: number[],
  ): Promise<RebalanceResponse> {
    this.rebalanceCalls.push({ weights, pinned });
    const recorded = fixture('rebalance_pin15_drag14.json');
    if (canonicalJson({ weights, pinned }) !== canonicalJson(recorded.request)) {
      throw new Error(
        `unrecorded rebalance request: ${JSON.stringify({ weights, pinned })}`,
      );
    }
    return recorded.response;
  }
}
