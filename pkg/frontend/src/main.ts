/** Bootstrap: wire the workbench state to the DOM. */

import { ApiClient } from './api.js';
import { Debouncer, Workbench } from './state.js';
import {
  renderBreakdown,
  renderNotices,
  renderRanking,
  renderSliders,
  renderWhatIfControls,
  renderWhatIfResult,
} from './views.js';

const api = new ApiClient('');
const workbench = new Workbench(api, render);

const el = (id: string): HTMLElement => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
};

function render(): void {
  el('ranking').innerHTML = renderRanking(workbench.ranking, workbench.selectedLibrary);
  el('sliders').innerHTML = renderSliders(
    workbench.attributeOrder,
    workbench.attributeNames,
    workbench.sliders,
    workbench.weightSum(),
  );
  el('breakdown').innerHTML = renderBreakdown(workbench.breakdown);
  el('whatif-controls').innerHTML = renderWhatIfControls(
    workbench.libraries,
    workbench.attributeOrder,
    workbench.attributeNames,
    workbench.whatIf,
  );
  el('whatif-result').innerHTML = renderWhatIfResult(workbench.whatIf, workbench.attributeNames);
  el('notices').innerHTML = renderNotices(workbench.notices);
}

let pendingDrag: { attribute: number; value: number } | null = null;
const dragDebouncer = new Debouncer(150, () => {
  if (!pendingDrag) return;
  const { attribute, value } = pendingDrag;
  pendingDrag = null;
  void workbench.commitWeightChange(attribute, value);
});

function wireEvents(): void {
  el('sliders').addEventListener('input', (event) => {
    const target = event.target as HTMLInputElement;
    if (target.matches('input[type="range"]')) {
      pendingDrag = { attribute: Number(target.dataset.attr), value: Number(target.value) };
      const row = target.closest('.slider-row');
      const label = row?.querySelector('.weight-value');
      if (label) label.textContent = Number(target.value).toFixed(2);
      dragDebouncer.trigger();
    }
  });

  el('sliders').addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const pin = target.closest('[data-pin]') as HTMLElement | null;
    if (pin) {
      workbench.togglePin(Number(pin.dataset.pin));
      return;
    }
    if (target.closest('[data-reset]')) {
      dragDebouncer.cancel();
      pendingDrag = null;
      void workbench.resetToReference();
    }
  });

  el('ranking').addEventListener('click', (event) => {
    const row = (event.target as HTMLElement).closest('tr[data-library]') as HTMLElement | null;
    if (row?.dataset.library) {
      void workbench.selectLibrary(row.dataset.library);
    }
  });

  el('whatif-controls').addEventListener('click', (event) => {
    if (!(event.target as HTMLElement).closest('[data-whatif-run]')) return;
    const pick = (role: string): string =>
      (el('whatif-controls').querySelector(`[data-whatif="${role}"]`) as HTMLSelectElement).value;
    void workbench.runWhatIf(pick('a'), pick('b'), Number(pick('attr')));
  });

  el('notices').addEventListener('click', (event) => {
    if ((event.target as HTMLElement).closest('[data-dismiss]')) {
      workbench.dismissNotices();
    }
  });
}

wireEvents();
void workbench.init().catch((error) => {
  workbench.pushNotice(String(error));
});
