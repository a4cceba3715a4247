/**
 * Pure renderers: state in, HTML string out. No fetches, no arithmetic on
 * index values; every displayed number is a server-provided string or float.
 */

import type { IndexReportDoc, LibrarySummary } from './api.js';
import type { SliderState, WhatIfSelection } from './state.js';

export const UNASSESSED_MARK = '-';

export function escapeHtml(text: string): string {
  return text
    .replaceAll('&', '&amp;')
    .replaceAll('<', '&lt;')
    .replaceAll('>', '&gt;')
    .replaceAll('"', '&quot;')
    .replaceAll("'", '&#39;');
}

function libraryLabel(report: IndexReportDoc): string {
  return `${report.library.name} ${report.library.version}`.trim();
}

export function renderRanking(
  ranking: IndexReportDoc[],
  selectedId: string | null,
): string {
  if (ranking.length === 0) {
    return '<p class="empty">No libraries ranked yet.</p>';
  }
  const rows = ranking
    .map((report, index) => {
      const selected = report.library_id === selectedId ? ' class="selected"' : '';
      return (
        `<tr data-library="${escapeHtml(report.library_id)}"${selected}>` +
        `<td class="pos">${index + 1}</td>` +
        `<td class="name">${escapeHtml(libraryLabel(report))}</td>` +
        `<td class="total">${escapeHtml(report.total.display)}</td>` +
        `<td class="bounds">[${escapeHtml(report.achievable_min.display)}, ` +
        `${escapeHtml(report.achievable_max.display)}]</td>` +
        '</tr>'
      );
    })
    .join('');
  return (
    '<table class="ranking"><thead><tr>' +
    '<th>#</th><th>Library</th><th>Index</th><th>Achievable</th>' +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderSliders(
  order: number[],
  names: Map<number, string>,
  sliders: Map<number, SliderState>,
  sum: number,
): string {
  const rows = order
    .map((id) => {
      const slider = sliders.get(id);
      if (!slider) return '';
      const pinLabel = slider.pinned ? 'pinned' : 'pin';
      const pinClass = slider.pinned ? 'pin on' : 'pin';
      return (
        `<div class="slider-row" data-attr="${id}">` +
        `<span class="attr-name">${escapeHtml(names.get(id) ?? String(id))}</span>` +
        `<input type="range" min="0" max="3" step="0.05" value="${slider.value}"` +
        ` data-attr="${id}" aria-label="weight for ${escapeHtml(names.get(id) ?? String(id))}">` +
        `<span class="weight-value">${slider.value.toFixed(2)}</span>` +
        `<button class="${pinClass}" data-pin="${id}">${pinLabel}</button>` +
        '</div>'
      );
    })
    .join('');
  const sumClass = Math.abs(sum - order.length) <= 1e-6 ? 'sum ok' : 'sum off';
  return (
    rows +
    `<div class="${sumClass}">sum <strong>${sum.toFixed(2)}</strong> / ${order.length}` +
    '<button class="reset" data-reset>reset to reference</button></div>'
  );
}

export function renderBreakdown(report: IndexReportDoc | null): string {
  if (!report) {
    return '<p class="empty">Select a library to see its breakdown.</p>';
  }
  let largest = 0;
  for (const row of report.rows) {
    largest = Math.max(largest, Math.abs(row.contribution.value));
  }
  const rows = report.rows
    .map((row) => {
      const mean = row.mean ? row.mean.display : UNASSESSED_MARK;
      const contribution = row.assessed ? row.contribution.display : UNASSESSED_MARK;
      const width =
        largest > 0 && row.assessed
          ? Math.round((Math.abs(row.contribution.value) / largest) * 100)
          : 0;
      const direction = row.contribution.value < 0 ? 'bar neg' : 'bar pos';
      const muted = row.assessed ? '' : ' class="unassessed"';
      return (
        `<tr${muted}>` +
        `<td>${row.attribute_id}</td>` +
        `<td>${escapeHtml(row.name)}</td>` +
        `<td>${escapeHtml(mean)}</td>` +
        `<td>${escapeHtml(row.weight.display)}</td>` +
        `<td>${escapeHtml(contribution)}</td>` +
        `<td class="barcell"><span class="${direction}" style="width:${width}%"></span></td>` +
        '</tr>'
      );
    })
    .join('');
  return (
    `<h3>${escapeHtml(libraryLabel(report))} &middot; index ${escapeHtml(report.total.display)}</h3>` +
    '<table class="breakdown"><thead><tr>' +
    '<th>#</th><th>Attribute</th><th>Mean</th><th>Weight</th><th>Contribution</th><th></th>' +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderWhatIfControls(
  libraries: LibrarySummary[],
  order: number[],
  names: Map<number, string>,
  selection: WhatIfSelection | null,
): string {
  const libraryOptions = (picked: string | undefined) =>
    libraries
      .map((entry) => {
        const chosen = entry.library_id === picked ? ' selected' : '';
        return `<option value="${escapeHtml(entry.library_id)}"${chosen}>${escapeHtml(
          `${entry.name} ${entry.version}`,
        )}</option>`;
      })
      .join('');
  const attributeOptions = order
    .map((id) => {
      const chosen = selection?.attribute === id ? ' selected' : '';
      return `<option value="${id}"${chosen}>${escapeHtml(names.get(id) ?? String(id))}</option>`;
    })
    .join('');
  return (
    `<label>A <select data-whatif="a">${libraryOptions(selection?.a)}</select></label>` +
    `<label>B <select data-whatif="b">${libraryOptions(selection?.b ?? libraries[1]?.library_id)}</select></label>` +
    `<label>attribute <select data-whatif="attr">${attributeOptions}</select></label>` +
    '<button data-whatif-run>find crossover</button>'
  );
}

export function renderWhatIfResult(
  selection: WhatIfSelection | null,
  names: Map<number, string>,
): string {
  if (!selection || !selection.result) {
    return '<p class="empty">Pick two libraries and an attribute.</p>';
  }
  const attribute = names.get(selection.attribute) ?? String(selection.attribute);
  const result = selection.result;
  if (result.crossovers.length === 0) {
    return `<p class="whatif-result">No crossover in range for <strong>${escapeHtml(
      attribute,
    )}</strong>.</p>`;
  }
  const parts = result.crossovers.map(
    (point) =>
      `at weight <strong>${escapeHtml(point.weight.display)}</strong> the lead passes ` +
      `from ${escapeHtml(point.leader_before)} to ${escapeHtml(point.leader_after)}`,
  );
  const note = result.constraint_relaxed
    ? ' <span class="note">(sum constraint relaxed during the sweep)</span>'
    : '';
  return `<p class="whatif-result">For <strong>${escapeHtml(attribute)}</strong>: ${parts.join(
    '; ',
  )}.${note}</p>`;
}

export function renderNotices(notices: string[]): string {
  if (notices.length === 0) return '';
  const items = notices
    .map((notice) => `<li>${escapeHtml(notice)}</li>`)
    .join('');
  return `<ul class="notices">${items}</ul><button data-dismiss>dismiss</button>`;
}
