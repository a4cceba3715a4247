/** Typed client for the scoring service. All numbers come from the server. */

import type { Rational } from './rational.js';

export interface Triplet {
  exact: Rational;
  value: number;
  display: string;
}

export interface LibraryInfo {
  name: string;
  version: string;
  language: string;
  source_url: string;
}

export interface ReportRow {
  attribute_id: number;
  name: string;
  assessed: boolean;
  assessed_count: number;
  ratings: Record<string, Rational>;
  mean: Triplet | null;
  weight: Triplet;
  contribution: Triplet;
}

export interface IndexReportDoc {
  library: LibraryInfo;
  library_id: string;
  catalog_version: string;
  weights: Record<string, Rational>;
  rows: ReportRow[];
  total: Triplet;
  achievable_min: Triplet;
  achievable_max: Triplet;
}

export interface CatalogCriterion {
  id: string;
  name: string;
  guidance: string;
  rubric: {
    kind: string;
    anchors: Record<string, Rational>;
    interpolation_allowed: boolean;
  };
}

export interface CatalogAttribute {
  id: number;
  name: string;
  description: string;
  criteria: CatalogCriterion[];
}

export interface CatalogResponse {
  engine_version: string;
  catalog_version: string;
  catalog: { version: string; attributes: CatalogAttribute[] };
}

export interface LibrarySummary {
  library_id: string;
  name: string;
  version: string;
  language: string;
  latest_revision: number;
  content_hash: string;
  assessment_count: number;
}

export interface LibrariesResponse {
  libraries: LibrarySummary[];
}

export interface ReferenceWeightsResponse {
  weights: Record<string, Rational>;
  weights_value: Record<string, number>;
  trace: Record<string, unknown>;
}

export interface ScoreResponse {
  report: IndexReportDoc;
  warnings: string[];
}

export interface RankResponse {
  results: IndexReportDoc[];
}

export interface CrossoverDoc {
  weight: Triplet;
  leader_before: string;
  leader_after: string;
}

export interface WhatIfResponse {
  attribute: number;
  range: [Rational, Rational];
  constraint_relaxed: boolean;
  crossovers: CrossoverDoc[];
}

export interface RebalanceResponse {
  weights: Record<string, Rational>;
  weights_value: Record<string, number>;
  sum: Rational;
  sum_value: number;
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly detail: unknown = null,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

/** What the workbench needs from the service; tests substitute fixtures. */
export interface ApiSurface {
  catalog(): Promise<CatalogResponse>;
  libraries(): Promise<LibrariesResponse>;
  referenceWeights(): Promise<ReferenceWeightsResponse>;
  rank(libraryIds: string[], weights: Record<string, Rational>): Promise<RankResponse>;
  score(libraryId: string, weights: Record<string, Rational>): Promise<ScoreResponse>;
  whatIf(
    aId: string,
    bId: string,
    attribute: number,
    range: [number, number],
    weights: Record<string, Rational>,
  ): Promise<WhatIfResponse>;
  rebalance(
    weights: Record<string, Rational>,
    pinned: number[],
  ): Promise<RebalanceResponse>;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient implements ApiSurface {
  constructor(
    private readonly base: string = '',
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, init);
    } catch (error) {
      throw new ApiError('NETWORK', `cannot reach the service: ${String(error)}`);
    }
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const code = body && typeof body.code === 'string' ? body.code : `HTTP_${response.status}`;
      const message = body && typeof body.message === 'string' ? body.message : response.statusText;
      throw new ApiError(code, message, body ? body.detail : null);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(payload),
    });
  }

  catalog(): Promise<CatalogResponse> {
    return this.request('/api/catalog');
  }

  libraries(): Promise<LibrariesResponse> {
    return this.request('/api/libraries');
  }

  referenceWeights(): Promise<ReferenceWeightsResponse> {
    return this.request('/api/weights/reference');
  }

  rank(libraryIds: string[], weights: Record<string, Rational>): Promise<RankResponse> {
    return this.post('/api/rank', { library_ids: libraryIds, weights });
  }

  score(libraryId: string, weights: Record<string, Rational>): Promise<ScoreResponse> {
    return this.post('/api/score', { library_id: libraryId, weights });
  }

  whatIf(
    aId: string,
    bId: string,
    attribute: number,
    range: [number, number],
    weights: Record<string, Rational>,
  ): Promise<WhatIfResponse> {
    return this.post('/api/whatif', {
      a: { library_id: aId },
      b: { library_id: bId },
      attribute,
      range,
      weights,
    });
  }

  rebalance(
    weights: Record<string, Rational>,
    pinned: number[],
  ): Promise<RebalanceResponse> {
    return this.post('/api/weights/rebalance', { weights, pinned });
  }
}
