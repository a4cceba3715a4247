/**
 * Workbench state: weight sliders with pins, ranking, breakdown, what-if.
 *
 * The server's exact weight vector (canonical rational encoding) is the
 * source of truth; slider floats are a derived view. Weight edits round
 * through POST /api/weights/rebalance, rankings through POST /api/rank.
 * In-flight responses superseded by newer interactions are dropped
 * (latest wins).
 */

import {
  ApiError,
  type ApiSurface,
  type IndexReportDoc,
  type LibrarySummary,
  type WhatIfResponse,
} from './api.js';
import { rationalToNumber, type Rational } from './rational.js';

export interface SliderState {
  value: number;
  pinned: boolean;
}

export interface WhatIfSelection {
  a: string;
  b: string;
  attribute: number;
  result: WhatIfResponse | null;
}

export class Debouncer {
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly delayMs: number,
    private readonly action: () => void,
  ) {}

  trigger(): void {
    this.cancel();
    this.timer = setTimeout(() => {
      this.timer = null;
      this.action();
    }, this.delayMs);
  }

  cancel(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }
}

export class Workbench {
  attributeOrder: number[] = [];
  attributeNames = new Map<number, string>();
  sliders = new Map<number, SliderState>();
  /** Exact weights as last confirmed by the server. */
  wireWeights: Record<string, Rational> = {};
  referenceWireWeights: Record<string, Rational> = {};
  libraries: LibrarySummary[] = [];
  ranking: IndexReportDoc[] = [];
  selectedLibrary: string | null = null;
  breakdown: IndexReportDoc | null = null;
  whatIf: WhatIfSelection | null = null;
  notices: string[] = [];
  dirty = false;

  private rankSequence = 0;
  private rebalanceSequence = 0;
  private breakdownSequence = 0;

  constructor(
    private readonly api: ApiSurface,
    private readonly onRender: () => void = () => {},
  ) {}

  async init(): Promise<void> {
    const catalog = await this.api.catalog();
    this.attributeOrder = catalog.catalog.attributes.map((a) => a.id);
    this.attributeNames = new Map(
      catalog.catalog.attributes.map((a) => [a.id, a.name]),
    );
    const reference = await this.api.referenceWeights();
    this.referenceWireWeights = reference.weights;
    this.applyWireWeights(reference.weights, { clearPins: true });
    this.libraries = (await this.api.libraries()).libraries;
    if (this.libraries.length > 0) {
      this.selectedLibrary = this.libraries[0].library_id;
    }
    await Promise.all([this.refreshRanking(), this.refreshBreakdown()]);
    this.onRender();
  }

  weightSum(): number {
    let sum = 0;
    for (const slider of this.sliders.values()) sum += slider.value;
    return sum;
  }

  pinnedAttributes(): number[] {
    return this.attributeOrder.filter((id) => this.sliders.get(id)?.pinned);
  }

  applyWireWeights(
    weights: Record<string, Rational>,
    options: { clearPins?: boolean } = {},
  ): void {
    this.wireWeights = { ...weights };
    for (const id of this.attributeOrder) {
      const previous = this.sliders.get(id);
      this.sliders.set(id, {
        value: rationalToNumber(weights[String(id)]),
        pinned: options.clearPins ? false : previous?.pinned ?? false,
      });
    }
    this.dirty = false;
  }

  togglePin(attributeId: number): void {
    const slider = this.sliders.get(attributeId);
    if (slider) {
      slider.pinned = !slider.pinned;
      this.onRender();
    }
  }

  pushNotice(message: string): void {
    this.notices.push(message);
    if (this.notices.length > 4) this.notices.shift();
    this.onRender();
  }

  dismissNotices(): void {
    this.notices = [];
    this.onRender();
  }

  /**
   * Commit a slider drag: the dragged attribute joins the pin set for this
   * rebalance so its new value survives, everything unpinned rescales
   * server-side to restore the sum constraint.
   */
  async commitWeightChange(attributeId: number, value: number): Promise<void> {
    const slider = this.sliders.get(attributeId);
    if (!slider) return;
    slider.value = value;
    this.dirty = true;
    const requested: Record<string, Rational> = {
      ...this.wireWeights,
      [String(attributeId)]: value,
    };
    const pinned = [...new Set([...this.pinnedAttributes(), attributeId])].sort(
      (left, right) => left - right,
    );
    const sequence = ++this.rebalanceSequence;
    try {
      const response = await this.api.rebalance(requested, pinned);
      if (sequence !== this.rebalanceSequence) return;
      this.applyWireWeights(response.weights);
      this.onRender();
      await Promise.all([this.refreshRanking(), this.refreshBreakdown()]);
    } catch (error) {
      if (sequence !== this.rebalanceSequence) return;
      this.reportError(error);
      this.applyWireWeights(this.wireWeights);
      this.onRender();
    }
  }

  async resetToReference(): Promise<void> {
    try {
      const reference = await this.api.referenceWeights();
      this.referenceWireWeights = reference.weights;
      this.applyWireWeights(reference.weights, { clearPins: true });
      this.onRender();
      await Promise.all([this.refreshRanking(), this.refreshBreakdown()]);
    } catch (error) {
      this.reportError(error);
    }
  }

  async refreshRanking(): Promise<void> {
    if (this.libraries.length === 0) return;
    const sequence = ++this.rankSequence;
    try {
      const response = await this.api.rank(
        this.libraries.map((entry) => entry.library_id),
        this.wireWeights,
      );
      if (sequence !== this.rankSequence) return;
      this.ranking = response.results;
      this.onRender();
    } catch (error) {
      if (sequence !== this.rankSequence) return;
      this.reportError(error);
    }
  }

  async selectLibrary(libraryId: string): Promise<void> {
    this.selectedLibrary = libraryId;
    await this.refreshBreakdown();
  }

  async refreshBreakdown(): Promise<void> {
    if (!this.selectedLibrary) return;
    const sequence = ++this.breakdownSequence;
    try {
      const response = await this.api.score(this.selectedLibrary, this.wireWeights);
      if (sequence !== this.breakdownSequence) return;
      this.breakdown = response.report;
      this.onRender();
    } catch (error) {
      if (sequence !== this.breakdownSequence) return;
      this.reportError(error);
    }
  }

  async runWhatIf(aId: string, bId: string, attribute: number): Promise<void> {
    this.whatIf = { a: aId, b: bId, attribute, result: null };
    try {
      const result = await this.api.whatIf(aId, bId, attribute, [0, 3], this.wireWeights);
      this.whatIf = { a: aId, b: bId, attribute, result };
      this.onRender();
    } catch (error) {
      this.reportError(error);
    }
  }

  private reportError(error: unknown): void {
    if (error instanceof ApiError) {
      this.pushNotice(`${error.code}: ${error.message}`);
    } else {
      this.pushNotice(String(error));
    }
  }
}
